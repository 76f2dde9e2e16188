#include "skein/tl_diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

// Position of point p on the boundary cycle L_1..L_m, R_n..R_1.
int cyclic_pos(int p, int m, int n) { return p < m ? p : 2 * m + n - 1 - p; }

}  // namespace

TLDiagram::TLDiagram(int m, int n, std::vector<int> pairing)
    : m_(m), n_(n), pairing_(std::move(pairing)) {
    if (m < 0 || n < 0 || (m + n) % 2 != 0)
        throw std::invalid_argument("boundary point count must be even");
    const int total = m + n;
    if (static_cast<int>(pairing_.size()) != total)
        throw std::invalid_argument("pairing size mismatch");
    for (int p = 0; p < total; ++p) {
        int q = pairing_[p];
        if (q < 0 || q >= total || q == p || pairing_[q] != p)
            throw std::invalid_argument("pairing is not a perfect matching");
    }
    // Crossingless test: no two chords interleave in the boundary cycle.
    std::vector<std::pair<int, int>> chords;
    for (int p = 0; p < total; ++p) {
        if (p < pairing_[p]) {
            int a = cyclic_pos(p, m, n), b = cyclic_pos(pairing_[p], m, n);
            chords.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) throw std::invalid_argument("pairing has crossing strands");
        }
}

TLDiagram TLDiagram::identity(int k) {
    std::vector<int> pr(2 * k);
    for (int i = 0; i < k; ++i) {
        pr[i] = k + i;
        pr[k + i] = i;
    }
    return TLDiagram(k, k, std::move(pr));
}

TLDiagram TLDiagram::generator(int k, int i) {
    if (i < 1 || i > k - 1) throw std::invalid_argument("generator index out of range");
    std::vector<int> pr(2 * k);
    for (int j = 0; j < k; ++j) {
        pr[j] = k + j;
        pr[k + j] = j;
    }
    pr[i - 1] = i;
    pr[i] = i - 1;
    pr[k + i - 1] = k + i;
    pr[k + i] = k + i - 1;
    return TLDiagram(k, k, std::move(pr));
}

namespace {

// Non-crossing perfect matchings of the cycle positions in `positions`
// (a contiguous block): the first position pairs with some position at odd
// distance, splitting the block into two independent sub-blocks.
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int lo, int hi) {
    std::vector<std::vector<std::pair<int, int>>> res;
    if (lo >= hi) {
        res.emplace_back();
        return res;
    }
    for (int b = lo + 1; b < hi; b += 2) {
        for (const auto& mi : noncrossing_matchings(lo + 1, b))
            for (const auto& mo : noncrossing_matchings(b + 1, hi)) {
                std::vector<std::pair<int, int>> all;
                all.reserve(1 + mi.size() + mo.size());
                all.emplace_back(lo, b);
                all.insert(all.end(), mi.begin(), mi.end());
                all.insert(all.end(), mo.begin(), mo.end());
                res.push_back(std::move(all));
            }
    }
    return res;
}

}  // namespace

std::vector<TLDiagram> TLDiagram::enumerate(int m, int n) {
    if (m < 0 || n < 0 || (m + n) % 2 != 0)
        throw std::invalid_argument("boundary point count must be even");
    const int total = m + n;
    std::vector<TLDiagram> out;
    if (total == 0) {
        out.emplace_back(m, n, std::vector<int>{});
        return out;
    }
    std::vector<int> point_of(total);
    for (int p = 0; p < total; ++p) point_of[cyclic_pos(p, m, n)] = p;
    for (const auto& matching : noncrossing_matchings(0, total)) {
        std::vector<int> pr(total);
        for (auto [x, y] : matching) {
            pr[point_of[x]] = point_of[y];
            pr[point_of[y]] = point_of[x];
        }
        out.emplace_back(m, n, std::move(pr));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool TLDiagram::is_identity() const {
    if (m_ != n_) return false;
    for (int i = 0; i < m_; ++i)
        if (pairing_[i] != m_ + i) return false;
    return true;
}

int TLDiagram::through_count() const {
    int t = 0;
    for (int i = 0; i < m_; ++i)
        if (pairing_[i] >= m_) ++t;
    return t;
}

TLDiagram TLDiagram::transposed() const {
    auto map_pt = [&](int p) { return p < m_ ? n_ + p : p - m_; };
    std::vector<int> pr(m_ + n_);
    for (int p = 0; p < m_ + n_; ++p) pr[map_pt(p)] = map_pt(pairing_[p]);
    return TLDiagram(n_, m_, std::move(pr));
}

TLDiagram TLDiagram::flipped() const {
    auto map_pt = [&](int p) { return p < m_ ? m_ - 1 - p : m_ + (n_ - 1 - (p - m_)); };
    std::vector<int> pr(m_ + n_);
    for (int p = 0; p < m_ + n_; ++p) pr[map_pt(p)] = map_pt(pairing_[p]);
    return TLDiagram(m_, n_, std::move(pr));
}

std::string TLDiagram::pairing_str() const {
    auto name = [&](int p) {
        return p < m_ ? "L" + std::to_string(p + 1) : "R" + std::to_string(p - m_ + 1);
    };
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int p = 0; p < m_ + n_; ++p) {
        if (pairing_[p] < p) continue;
        if (!first) os << ",";
        first = false;
        os << "(" << name(p) << "," << name(pairing_[p]) << ")";
    }
    os << "]";
    return os.str();
}

std::strong_ordering TLDiagram::operator<=>(const TLDiagram& o) const {
    if (auto c = m_ <=> o.m_; c != 0) return c;
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return pairing_ <=> o.pairing_;
}

Composition compose_diagrams(const TLDiagram& a, const TLDiagram& b) {
    if (a.right_points() != b.left_points())
        throw std::invalid_argument("composition boundary mismatch");

    static std::map<std::pair<TLDiagram, TLDiagram>, Composition> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
    }

    const int m = a.left_points(), n = a.right_points(), p = b.right_points();
    std::vector<int> pr(m + p, -1);
    std::vector<bool> mid_seen(n, false);
    // Walk from an outer boundary point across the glued middle boundary.
    // Outer points are encoded [0,m) = left of a, [m,m+p) = right of b.
    auto trace = [&](int start) {
        bool in_a = start < m;
        int pt = in_a ? start : start - m + n;  // local point index in a or b
        while (true) {
            int q = in_a ? a.partner(pt) : b.partner(pt);
            if (in_a && q < m) return q;
            if (!in_a && q >= n) return m + (q - n);
            int mid = in_a ? q - m : q;
            mid_seen[mid] = true;
            in_a = !in_a;
            pt = in_a ? m + mid : mid;
        }
    };
    for (int s = 0; s < m + p; ++s) {
        if (pr[s] != -1) continue;
        int e = trace(s);
        pr[s] = e;
        pr[e] = s;
    }
    // Middle points untouched by any boundary strand form closed loops;
    // their a- and b-partners stay in the middle.
    int loops = 0;
    for (int s = 0; s < n; ++s) {
        if (mid_seen[s]) continue;
        ++loops;
        int cur = s;
        do {
            mid_seen[cur] = true;
            int via_a = a.partner(m + cur) - m;
            mid_seen[via_a] = true;
            cur = b.partner(via_a);
        } while (cur != s);
    }
    Composition result{loops, TLDiagram(m, p, std::move(pr))};
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(a, b), result);
    return result;
}

ThroughFactorization through_factor(const TLDiagram& d) {
    const int m = d.left_points(), n = d.right_points();
    std::vector<int> through_left;
    for (int i = 0; i < m; ++i)
        if (d.partner(i) >= m) through_left.push_back(i);
    const int t = static_cast<int>(through_left.size());

    std::vector<int> front(m + t, -1);
    for (int i = 0; i < m; ++i)
        if (d.partner(i) < m) front[i] = d.partner(i);
    for (int s = 0; s < t; ++s) {
        front[through_left[s]] = m + s;
        front[m + s] = through_left[s];
    }

    std::vector<int> back(t + n, -1);
    for (int j = 0; j < n; ++j)
        if (d.partner(m + j) >= m) back[t + j] = t + (d.partner(m + j) - m);
    for (int s = 0; s < t; ++s) {
        int right_index = d.partner(through_left[s]) - m;
        back[s] = t + right_index;
        back[t + right_index] = s;
    }

    return ThroughFactorization{t, TLDiagram(m, t, std::move(front)),
                                TLDiagram(t, n, std::move(back))};
}

}  // namespace skein
