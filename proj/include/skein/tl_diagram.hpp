// Crossingless matchings between m left and n right boundary points: the
// diagram basis of the Temperley-Lieb category TL(m, n).
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skein {

// Boundary points are numbered L_1..L_m top to bottom on the left and
// R_1..R_n top to bottom on the right.  Internally point p in [0, m) is
// L_{p+1} and point p in [m, m+n) is R_{p-m+1}.  Planarity is checked
// against the boundary cycle L_1..L_m, R_n..R_1.
class TLDiagram {
public:
    // pairing[p] = q means points p and q are joined; must be a perfect
    // crossingless matching.  Throws std::invalid_argument otherwise.
    TLDiagram(int m, int n, std::vector<int> pairing);

    static TLDiagram identity(int k);
    // Cap-cup generator e_i: joins L_i-L_{i+1} and R_i-R_{i+1}, all other
    // strands straight through.  Pre: 1 <= i <= k-1.
    static TLDiagram generator(int k, int i);
    // All crossingless matchings in deterministic (pairing-lex) order.
    // The count is the Catalan number C_{(m+n)/2}.
    static std::vector<TLDiagram> enumerate(int m, int n);

    int left_points() const { return m_; }
    int right_points() const { return n_; }
    int partner(int p) const { return pairing_[p]; }
    const std::vector<int>& pairing() const { return pairing_; }

    bool is_identity() const;
    // Number of strands joining the left boundary to the right boundary.
    int through_count() const;

    // Left-right reflection: TL(m,n) -> TL(n,m).
    TLDiagram transposed() const;
    // Top-bottom reflection: L_j -> L_{m+1-j}, R_j -> R_{n+1-j}.
    TLDiagram flipped() const;

    // Raw pairing display, e.g. "[(L1,R1),(L2,L3)]".
    std::string pairing_str() const;

    bool operator==(const TLDiagram& o) const = default;
    std::strong_ordering operator<=>(const TLDiagram& o) const;

private:
    int m_, n_;
    std::vector<int> pairing_;
};

// Result of gluing the right boundary of a to the left boundary of b:
// the composed diagram plus the number of closed loops produced.
struct Composition {
    int loops;
    TLDiagram diagram;
};
// Pre: a.right_points() == b.left_points().  Memoized.
Composition compose_diagrams(const TLDiagram& a, const TLDiagram& b);

// Unique factorization d = front . back through the minimal middle
// boundary: front keeps d's left caps and routes the through strands, in
// order, to t new points; back is symmetric.  Recomposing yields d with
// zero loops.
struct ThroughFactorization {
    int through;
    TLDiagram front;
    TLDiagram back;
};
ThroughFactorization through_factor(const TLDiagram& d);

}  // namespace skein
