#pragma once

#include <string>
#include <vector>

#include "schur/lie_algebra.hpp"

namespace schur {

/// A(n): all structure constants zero.
LieAlgebra abelian(int n);

/// H(m): dimension 2m+1, basis v_1..v_2m, v, brackets [v_{2i-1}, v_{2i}] = v.
/// Rejects m < 1.
LieAlgebra heisenberg(int m);

/// Model filiform algebra of dimension n >= 3: [e_1, e_i] = e_{i+1} for
/// 2 <= i <= n-1 (maximal nilpotency class n-1).
LieAlgebra filiform(int n);

/// Moebius function: 1 at r=1, 0 when a square divides r, (-1)^s when r is a
/// product of s distinct primes. Rejects r < 1.
int mobius(long r);

/// Witt formula l_n(d) = (1/d) sum_{r|d} mu(r) n^{d/r}: the dimension of the
/// degree-d graded piece of the free Lie algebra on n generators.
long witt_dim(int n, int d);

/// One basic bracketed word of a Hall family. Generators have degree 1 and
/// left = right = -1; composite words reference their subword indices.
struct HallWord {
    int degree = 1;
    int left = -1;
    int right = -1;
    int generator = -1;
};

/// Hall words of degree <= class_cap on generators x_1 < ... < x_n, indexed in
/// degree-major order (ties broken lexicographically by subword indices).
/// Admissible composite words [u, v] have u < v and, when v = [a, b], u >= a.
class HallBasis {
public:
    HallBasis(int generators, int class_cap);

    int generators() const { return generators_; }
    int class_cap() const { return class_cap_; }
    int size() const { return int(words_.size()); }
    const HallWord& word(int idx) const { return words_[idx]; }
    int count_of_degree(int d) const;
    /// Index of the admissible word [left, right], or -1 when not in the family.
    int find(int left, int right) const;
    std::string word_str(int idx) const;

private:
    int generators_, class_cap_;
    std::vector<HallWord> words_;
    std::vector<int> degree_offset_;  // degree_offset_[d] = first index of degree d
    std::vector<std::pair<std::pair<int, int>, int>> by_parts_;  // sorted
};

HallBasis hall_basis(int n, int c);

/// Free nilpotent Lie algebra of class c on n generators: structure constants
/// on the Hall basis of degree <= c, brackets of total degree > c truncated to
/// zero. Basis index k corresponds to hall_basis(n, c).word(k).
LieAlgebra free_nilpotent(int n, int c);

}  // namespace schur
