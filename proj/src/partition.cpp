#include "pjack/partition.hpp"

#include <algorithm>
#include <functional>

namespace pjack {

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

int Partition::multiplicity(int v) const {
    int c = 0;
    for (int p : parts_)
        if (p == v) ++c;
    return c;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Dominance dominance_leq(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size())
        throw std::invalid_argument("dominance_leq: sizes differ");
    int n = std::max(mu.length(), la.length());
    long sm = 0, sl = 0;
    bool leq = true, geq = true;
    for (int i = 0; i < n; ++i) {
        sm += mu.part(i);
        sl += la.part(i);
        if (sm > sl) leq = false;
        if (sm < sl) geq = false;
    }
    if (leq) return Dominance::LessEqual;
    if (geq) return Dominance::Greater;
    return Dominance::Incomparable;
}

namespace {
void gen_partitions(long n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    int top = static_cast<int>(std::min<long>(max_part, n));
    for (int p = top; p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(long n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, max_part, max_len, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(long n) {
    return partitions_of(n, n > 0 ? static_cast<int>(n) : 0,
                         n > 0 ? static_cast<int>(n) : 0);
}

std::vector<Partition> subdiagrams(int s, int r) {
    std::vector<Partition> out;
    for (long d = 0; d <= static_cast<long>(s) * r; ++d) {
        auto part = partitions_of(d, r, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<int>> gap_subsets(int window, int gap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        out.push_back(cur);
        for (int i = next; i < window; ++i) {
            cur.push_back(i);
            rec(i + gap);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Partition rectangle(int s, int r) {
    if (s <= 0 || r <= 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(r), s));
}

}  // namespace pjack
