#include "knotfill/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotfill {

BraidWord::BraidWord(int n, std::vector<BraidLetter> ls) : strands(n), letters(std::move(ls)) {
    if (strands < 2) throw std::invalid_argument("braid group needs at least 2 strands");
    for (const auto& l : letters) {
        if (l.index < 1 || l.index >= strands)
            throw std::invalid_argument("generator index out of range for strand count");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    }
}

void BraidWord::push(int index, int exponent) {
    if (index < 1 || index >= strands)
        throw std::invalid_argument("generator index out of range for strand count");
    int sign = exponent >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(exponent); ++k) letters.push_back({index, sign});
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> perm(static_cast<size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : letters) std::swap(perm[l.index - 1], perm[l.index]);
    return perm;
}

int BraidWord::closure_components() const {
    std::vector<int> perm = permutation();
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (strands != o.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    r.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back({it->index, -it->sign});
    return r;
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::vector<BraidLetter> letters = parse_braid_letters(text);
    if (strands == 0) {
        for (const auto& l : letters) strands = std::max(strands, l.index + 1);
        strands = std::max(strands, 2);
    }
    return BraidWord(strands, std::move(letters));
}

BurauMatrix::BurauMatrix(int strands) : strands_(strands) {
    if (strands < 2) throw std::invalid_argument("braid group needs at least 2 strands");
    m_.assign(static_cast<size_t>(dim()) * dim(), LaurentPoly1());
    for (int i = 0; i < dim(); ++i) at(i, i) = LaurentPoly1::one();
}

BurauMatrix BurauMatrix::generator(int strands, int index, int sign) {
    if (index < 1 || index >= strands) throw std::invalid_argument("generator index out of range");
    BurauMatrix g(strands);
    int i = index - 1;  // 0-based row
    if (sign < 0) {
        // Image of sigma_index^-1: identity except row i.
        g.at(i, i) = LaurentPoly1::term(1, -1);              // -t
        if (i > 0) g.at(i, i - 1) = LaurentPoly1::term(1, 1);  // t
        if (i + 1 < g.dim()) g.at(i, i + 1) = LaurentPoly1::one();
    } else {
        // Inverse of the matrix above.
        g.at(i, i) = LaurentPoly1::term(-1, -1);               // -t^-1
        if (i > 0) g.at(i, i - 1) = LaurentPoly1::one();
        if (i + 1 < g.dim()) g.at(i, i + 1) = LaurentPoly1::term(-1, 1);  // t^-1
    }
    return g;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
    if (strands_ != o.strands_) throw std::invalid_argument("strand count mismatch");
    BurauMatrix r(strands_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            LaurentPoly1 acc;
            for (int k = 0; k < dim(); ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool BurauMatrix::operator==(const BurauMatrix& o) const {
    return strands_ == o.strands_ && m_ == o.m_;
}

bool BurauMatrix::is_identity() const { return *this == BurauMatrix(strands_); }

namespace {

LaurentPoly1 det_rec(const std::vector<LaurentPoly1>& m, std::vector<int>& cols, int row, int dim) {
    if (static_cast<int>(cols.size()) == 1)
        return m[static_cast<size_t>(row) * dim + cols[0]];
    LaurentPoly1 acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly1& pivot = m[static_cast<size_t>(row) * dim + cols[k]];
        if (pivot.is_zero()) continue;
        int col = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        LaurentPoly1 minor = det_rec(m, cols, row + 1, dim);
        cols.insert(cols.begin() + static_cast<long>(k), col);
        LaurentPoly1 contrib = pivot * minor;
        acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

}  // namespace

LaurentPoly1 BurauMatrix::det() const {
    std::vector<int> cols(static_cast<size_t>(dim()));
    std::iota(cols.begin(), cols.end(), 0);
    return det_rec(m_, cols, 0, dim());
}

BurauMatrix burau(const BraidWord& word) {
    BurauMatrix r(word.strands);
    for (const auto& l : word.letters)
        r = r * BurauMatrix::generator(word.strands, l.index, l.sign);
    return r;
}

LaurentPoly1 alexander_of_closure(const BraidWord& word) {
    int comps = word.closure_components();
    if (comps != 1)
        throw std::invalid_argument("closure has " + std::to_string(comps) +
                                    " components; use the two-variable pipeline for links");

    BurauMatrix m = burau(word);
    BurauMatrix diff = m;
    for (int i = 0; i < m.dim(); ++i)
        diff.at(i, i) = diff.at(i, i) - LaurentPoly1::one();
    LaurentPoly1 d = diff.det();
    if (d.is_zero())
        throw std::runtime_error("internal error: vanishing Burau determinant for a knot closure");

    // det(psi - I) = +- t^k Delta(t) (1 + t + ... + t^{n-1}); the division
    // is exact, a remainder signals a bug.
    LaurentPoly1 cyc;
    for (int i = 0; i < word.strands; ++i) cyc.add_term(i, 1);
    auto q = d.divide_exact(cyc);
    if (!q)
        throw std::runtime_error("internal error: Burau determinant not divisible by 1+t+...+t^{n-1}");

    // Fix the unit: center the support and force Delta(1) = +1.
    long lo = q->low_deg(), hi = q->high_deg();
    if ((lo + hi) % 2 != 0)
        throw std::runtime_error("internal error: Alexander support cannot be centered");
    LaurentPoly1 alex = q->shifted(-(lo + hi) / 2);
    Int at_one = alex.value_at_one();
    if (at_one == -1) alex = -alex;
    else if (at_one != 1)
        throw std::runtime_error("internal error: Delta(1) != +-1 for a knot closure");
    if (!alex.is_symmetric())
        throw std::runtime_error("internal error: symmetrization failed");
    return alex;
}

}  // namespace knotfill
