#pragma once

// Study determinants of quaternionic matrices.
//
// A quaternion q = z1 + z2 j with z1 = w + x i, z2 = y + z i is sent to the complex
// block [[z1, z2], [-conj(z2), conj(z1)]], conjugation acting on i only. The Study
// determinant of an n x n quaternionic matrix is the determinant of the resulting
// 2n x 2n matrix (not its square root).

#include "vknot/matrix.hpp"

#include <stdexcept>

namespace vknot {

class NonRealStudyDeterminant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Matrix<GaussianLaurent> quaternion_to_complex(const Matrix<QuatLaurent>& m);

/// Fraction-free determinant of the complex form. Throws NonRealStudyDeterminant
/// if the imaginary part is non-zero.
LaurentPoly study_determinant(const Matrix<QuatLaurent>& m);

/// Study determinants of the n^2 quaternionic minors, row-major in (deleted row,
/// deleted column).
std::vector<LaurentPoly> codim1_study_minors(const Matrix<QuatLaurent>& m);

/// gcd of all codimension-1 Study determinants, normalized as poly_gcd.
LaurentPoly codim1_gcd(const Matrix<QuatLaurent>& m);

/// Study determinant and codimension-1 gcd computed together by evaluating the
/// complex form at integer points modulo a 62-bit prime and interpolating. All
/// n^2 minors at one point come from a single elimination (inverse when the
/// matrix is regular, the two kernels when its corank is 2). The prime exceeds
/// twice a row-norm bound on every coefficient, so the result is exact; if the
/// bound does not fit, the fraction-free path is used instead.
struct StudyPair {
    LaurentPoly det;
    LaurentPoly gcd;
};
StudyPair study_pair(const Matrix<QuatLaurent>& m);

} // namespace vknot
