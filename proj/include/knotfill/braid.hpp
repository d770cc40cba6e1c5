#pragma once

#include <vector>

#include "knotfill/laurent.hpp"
#include "knotfill/parse.hpp"

namespace knotfill {

/// Word in the n-strand braid group. The empty word is the identity braid.
struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<BraidLetter> ls);

    /// Appends generator index^exponent (exponent may be negative or zero).
    void push(int index, int exponent);

    /// Permutation induced on strand endpoints (0-based images).
    std::vector<int> permutation() const;
    /// Number of components of the braid closure.
    int closure_components() const;

    BraidWord operator*(const BraidWord& o) const;  // concatenation
    BraidWord inverse() const;
};

BraidWord parse_braid(const std::string& text, int strands = 0);

/// (n-1)x(n-1) matrix of Laurent polynomials, the image of a braid under
/// the reduced Burau representation.
class BurauMatrix {
public:
    explicit BurauMatrix(int strands);  // identity
    static BurauMatrix generator(int strands, int index, int sign);

    int strands() const { return strands_; }
    int dim() const { return strands_ - 1; }
    const LaurentPoly1& at(int r, int c) const { return m_[r * dim() + c]; }
    LaurentPoly1& at(int r, int c) { return m_[r * dim() + c]; }

    BurauMatrix operator*(const BurauMatrix& o) const;
    bool operator==(const BurauMatrix& o) const;
    bool is_identity() const;

    LaurentPoly1 det() const;

private:
    int strands_;
    std::vector<LaurentPoly1> m_;
};

/// Product, in word order, of the reduced Burau generator images. The B_3
/// images of the inverse generators are
///   sigma_1^-1 -> [[-t, 1], [0, 1]],  sigma_2^-1 -> [[1, 0], [t, -t]],
/// extended to B_n by the matching block convention.
BurauMatrix burau(const BraidWord& word);

/// Symmetrized Alexander polynomial of the braid closure, normalized so
/// that Delta(t) = Delta(t^-1) and Delta(1) = 1. Requires the closure to
/// be a knot; throws std::invalid_argument for multi-component closures.
LaurentPoly1 alexander_of_closure(const BraidWord& word);

}  // namespace knotfill
