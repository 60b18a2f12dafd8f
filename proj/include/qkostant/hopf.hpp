#pragma once

#include <map>
#include <optional>

#include "qkostant/mutation.hpp"
#include "qkostant/qminors.hpp"

namespace qk {

/// Element of H = A[det_q^-1]: numerator (normal form in the stage-1 algebra)
/// times det_q^{-det_power}. Equality is cross-multiplicative; reduce() gives
/// the canonical representative (det_q cancelled while the numerator divides).
struct LocalizedElement {
    NCPolynomial num;
    unsigned det_power = 0;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator<(const LocalizedElement& a, const LocalizedElement& b) {
        return a.det_power != b.det_power ? a.det_power < b.det_power : a.num < b.num;
    }
};

/// A (x) A with both legs normalized
using TensorAA = std::map<std::pair<Word, Word>, LaurentScalar>;
/// A (x) H: first leg a standard word, second leg the matched localized element
using TensorElement = std::map<Word, LocalizedElement>;

enum class CoactionVariant { alpha, beta };

/// The Hopf-side context for one algebra size: the stage-1 rewriting system,
/// det_q and its powers, antipode images, and the det_q division tables.
class QuantumGL {
public:
    explicit QuantumGL(int n);

    int n() const { return n_; }
    const MutationSystem& system() const { return S1_; }
    Rewriter& rewriter() { return rw_; }
    const NCPolynomial& det() const { return det_; }
    const NCPolynomial& det_power(unsigned k);

    // ---- localized arithmetic ------------------------------------------------
    LocalizedElement loc_add(const LocalizedElement& a, const LocalizedElement& b);
    LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b);
    bool loc_equal(const LocalizedElement& a, const LocalizedElement& b);
    /// cancel det_q factors while the numerator divides exactly
    LocalizedElement reduce(LocalizedElement x);
    /// exact division by det_q in the PBW basis, via the content-graded
    /// triangular systems; nullopt when not divisible
    std::optional<NCPolynomial> divide_by_det(const NCPolynomial& p);

    // ---- bialgebra structure -------------------------------------------------
    /// matrix comultiplication x_ij -> sum_k x_ik (x) x_kj, extended as an
    /// algebra morphism; both legs normalized
    TensorAA comultiply(const NCPolynomial& p);
    /// counit: eps(x_ij) = delta_ij, extended multiplicatively
    LaurentScalar counit(const NCPolynomial& p);
    /// S(u_ij) = (-q)^{i-j} * minor(rows\{j}, cols\{i}) * det_q^{-1}
    LocalizedElement antipode_generator(int i, int j);

    // ---- adjoint coactions ---------------------------------------------------
    /// alpha: a -> sum a_(2) (x) a_(3) S(a_(1)), on generators
    ///   x_ij -> sum x_ms (x) u_sj S(u_im);
    /// beta:  a -> sum a_(2) (x) S^-1(a_(3)) a_(1), on generators
    ///   x_ij -> sum x_ms (x) S^-1(u_sj) u_im
    /// where S^-1(u_ij) = q^{2(j-i)} S(u_ij); the inverse antipode is what
    /// makes the primed minor sums beta-invariant.
    TensorElement coaction(const NCPolynomial& p, CoactionVariant variant);
    bool is_invariant(const NCPolynomial& p, CoactionVariant variant);
    /// alpha_q(x*y) = alpha_q(x) * alpha_q(y); pre: y invariant under alpha
    bool multiplicativity_on_invariants_check(const NCPolynomial& x, const NCPolynomial& y);

    /// componentwise product on A (x) H
    TensorElement tensor_product(const TensorElement& a, const TensorElement& b);
    bool tensor_equal(const TensorElement& a, const TensorElement& b);
    TensorElement tensor_of(const NCPolynomial& p, const LocalizedElement& h);
    /// canonical per-leg det reduction (for display and tests)
    TensorElement reduce_tensor(TensorElement t);

private:
    struct DivisionTable {
        std::vector<Word> quotient_words;
        std::vector<std::vector<LaurentScalar>> matrix;  // rows: class words, cols: quotient
        std::vector<Word> class_words;
    };
    const DivisionTable& division_table(const WordContent& target);
    TensorElement collect_legs(std::map<Word, std::map<unsigned, NCPolynomial>> accum);

    int n_;
    MutationSystem S1_;
    Rewriter rw_;
    NCPolynomial det_;
    std::vector<NCPolynomial> det_powers_;
    std::vector<std::optional<LocalizedElement>> antipode_cache_;
    std::map<WordContent, DivisionTable> division_tables_;
};

/// Standard words with the given row/column content, ascending lex.
std::vector<Word> words_with_content(int n, const WordContent& content);

}  // namespace qk
