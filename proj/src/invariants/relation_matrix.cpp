#include "vknot/invariants.hpp"
#include "vknot/study.hpp"

namespace vknot {

namespace {

template <class R>
struct SwitchCoefficients {
    R a, b, c, d;
};

template <class R>
Matrix<R> relation_matrix(const LinkGaussCode& code, const SwitchCoefficients<R>& s)
{
    EdgeStructure es = edge_structure(code);
    const std::size_t n = es.edges.size() + es.free_components.size();
    Matrix<R> m(n, n);
    const R one = RingTraits<R>::one();
    std::size_t row = 0;
    for (const auto& x : es.crossings) {
        const bool pos = x.sign == Sign::Positive;
        // out = coefficient * in for positive crossings; inputs and outputs trade places otherwise.
        std::size_t u_res = pos ? x.under_out : x.under_in, o_res = pos ? x.over_out : x.over_in;
        std::size_t u_arg = pos ? x.under_in : x.under_out, o_arg = pos ? x.over_in : x.over_out;
        m(row, u_res) += one;
        m(row, u_arg) -= s.c;
        m(row, o_arg) -= s.d;
        ++row;
        m(row, o_res) += one;
        m(row, u_arg) -= s.a;
        m(row, o_arg) -= s.b;
        ++row;
    }
    // Free circles: fresh columns and zero rows.
    return m;
}

} // namespace

Matrix<LaurentPoly2> alexander_matrix(const LinkGaussCode& code)
{
    SwitchCoefficients<LaurentPoly2> s{
        LaurentPoly2(),
        LaurentPoly2::monomial(1, 1, 0),
        LaurentPoly2::monomial(1, 0, 1),
        LaurentPoly2::constant(1) - LaurentPoly2::monomial(1, 1, 1),
    };
    return relation_matrix(code, s);
}

Matrix<QuatLaurent> quaternionic_matrix(const LinkGaussCode& code)
{
    const LaurentPoly one = LaurentPoly::constant(1);
    SwitchCoefficients<QuatLaurent> s{
        QuatLaurent(one, one),
        QuatLaurent({}, {}, LaurentPoly::monomial(1, 1)),
        QuatLaurent({}, {}, LaurentPoly::monomial(-1, -1)),
        QuatLaurent(one, one),
    };
    return relation_matrix(code, s);
}

LaurentPoly2 gen_alexander(const LinkGaussCode& code)
{
    return normalize_unit(det_fraction_free(alexander_matrix(code)));
}

QuaternionicPair quaternionic_invariant(const LinkGaussCode& code)
{
    StudyPair p = study_pair(quaternionic_matrix(code));
    return {normalize_gcd(p.det), normalize_gcd(p.gcd)};
}

} // namespace vknot
