#include "schur/constructions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace schur {

LieAlgebra abelian(int n) {
    if (n < 0) throw std::invalid_argument("abelian: dimension must be >= 0");
    return LieAlgebra(n, "A(" + std::to_string(n) + ")");
}

LieAlgebra heisenberg(int m) {
    if (m < 1) throw std::invalid_argument("heisenberg: m must be >= 1");
    LieAlgebra L(2 * m + 1, "H(" + std::to_string(m) + ")");
    for (int i = 0; i < m; ++i) L.set_bracket_component(2 * i, 2 * i + 1, 2 * m, Rational(1));
    return L;
}

LieAlgebra filiform(int n) {
    if (n < 3) throw std::invalid_argument("filiform: dimension must be >= 3");
    LieAlgebra L(n, "filiform" + std::to_string(n));
    for (int i = 1; i <= n - 2; ++i) L.set_bracket_component(0, i, i + 1, Rational(1));
    return L;
}

int mobius(long r) {
    if (r < 1) throw std::invalid_argument("mobius: argument must be >= 1");
    int prime_factors = 0;
    for (long p = 2; p * p <= r; ++p) {
        if (r % p != 0) continue;
        r /= p;
        if (r % p == 0) return 0;
        ++prime_factors;
    }
    if (r > 1) ++prime_factors;
    return prime_factors % 2 == 0 ? 1 : -1;
}

long witt_dim(int n, int d) {
    if (n < 1) throw std::invalid_argument("witt_dim: n must be >= 1");
    if (d < 1) throw std::invalid_argument("witt_dim: d must be >= 1");
    mpz_class sum = 0;
    for (long r = 1; r <= d; ++r) {
        if (d % r != 0) continue;
        int mu = mobius(r);
        if (mu == 0) continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(d / r));
        sum += mu * power;
    }
    mpz_class den(d);
    if (!mpz_divisible_p(sum.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("witt_dim: sum not divisible by d");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), den.get_mpz_t());
    return q.get_si();
}

HallBasis::HallBasis(int generators, int class_cap)
    : generators_(generators), class_cap_(class_cap) {
    if (generators < 1) throw std::invalid_argument("hall_basis: need at least one generator");
    if (class_cap < 1) throw std::invalid_argument("hall_basis: class cap must be >= 1");
    degree_offset_.assign(class_cap + 2, 0);
    for (int g = 0; g < generators; ++g) {
        HallWord w;
        w.degree = 1;
        w.generator = g;
        words_.push_back(w);
    }
    degree_offset_[1] = 0;
    for (int d = 2; d <= class_cap; ++d) {
        degree_offset_[d] = int(words_.size());
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < degree_offset_[d]; ++u) {
            int du = words_[u].degree;
            int dv = d - du;
            if (dv < 1 || dv > class_cap) continue;
            int lo = degree_offset_[dv];
            int hi = degree_offset_[dv + 1];  // filled: dv + 1 <= d
            for (int v = std::max(lo, u + 1); v < hi; ++v) {
                if (words_[v].left >= 0 && u < words_[v].left) continue;
                candidates.emplace_back(u, v);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [u, v] : candidates) {
            HallWord w;
            w.degree = d;
            w.left = u;
            w.right = v;
            words_.push_back(w);
        }
    }
    degree_offset_[class_cap + 1] = int(words_.size());
    for (int i = generators; i < int(words_.size()); ++i)
        by_parts_.emplace_back(std::make_pair(words_[i].left, words_[i].right), i);
    std::sort(by_parts_.begin(), by_parts_.end());
}

int HallBasis::count_of_degree(int d) const {
    if (d < 1 || d > class_cap_) return 0;
    return degree_offset_[d + 1] - degree_offset_[d];
}

int HallBasis::find(int left, int right) const {
    auto key = std::make_pair(std::make_pair(left, right), -1);
    auto it = std::lower_bound(by_parts_.begin(), by_parts_.end(), key);
    if (it != by_parts_.end() && it->first == key.first) return it->second;
    return -1;
}

std::string HallBasis::word_str(int idx) const {
    const HallWord& w = words_[idx];
    if (w.left < 0) return "x" + std::to_string(w.generator + 1);
    return "[" + word_str(w.left) + "," + word_str(w.right) + "]";
}

HallBasis hall_basis(int n, int c) { return HallBasis(n, c); }

namespace {

// Rewrites arbitrary brackets of Hall words into the Hall basis. For u < v
// with v = [a, b] and u < a, the word is not admissible and Jacobi gives
// [u,[a,b]] = [[u,a],b] + [a,[u,b]]; both summands reduce to combinations of
// pairs whose smaller member is strictly larger, so the recursion terminates.
class HallRewriter {
public:
    explicit HallRewriter(const HallBasis& basis) : basis_(basis) {}

    std::map<int, mpz_class> expand(int x, int y) {
        if (x == y) return {};
        if (x > y) {
            std::map<int, mpz_class> neg;
            for (const auto& [k, c] : expand_ordered(y, x)) neg[k] = -c;
            return neg;
        }
        return expand_ordered(x, y);
    }

private:
    const HallBasis& basis_;
    std::map<std::pair<int, int>, std::map<int, mpz_class>> memo_;

    static void add_scaled(std::map<int, mpz_class>& acc, const std::map<int, mpz_class>& term,
                           const mpz_class& coef) {
        for (const auto& [k, c] : term) {
            mpz_class& slot = acc[k];
            slot += c * coef;
            if (slot == 0) acc.erase(k);
        }
    }

    std::map<int, mpz_class> expand_ordered(int u, int v) {
        int total = basis_.word(u).degree + basis_.word(v).degree;
        if (total > basis_.class_cap()) return {};
        auto key = std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::map<int, mpz_class> result;
        const HallWord& wv = basis_.word(v);
        if (wv.left < 0 || u >= wv.left) {
            int idx = basis_.find(u, v);
            if (idx < 0) throw std::logic_error("hall rewrite: admissible word missing");
            result[idx] = 1;
        } else {
            int a = wv.left, b = wv.right;
            for (const auto& [w, c] : expand(u, a)) add_scaled(result, expand(w, b), c);
            for (const auto& [w, c] : expand(u, b)) add_scaled(result, expand(a, w), c);
        }
        memo_[key] = result;
        return result;
    }
};

}  // namespace

LieAlgebra free_nilpotent(int n, int c) {
    HallBasis basis(n, c);
    HallRewriter rewriter(basis);
    LieAlgebra L(basis.size(), "F(" + std::to_string(n) + "," + std::to_string(c) + ")");
    for (int i = 0; i < basis.size(); ++i)
        for (int j = i + 1; j < basis.size(); ++j)
            for (const auto& [k, coef] : rewriter.expand(i, j))
                L.set_bracket_component(i, j, k, Rational(coef));
    return L;
}

}  // namespace schur
