#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qk0/algebra_table.hpp"
#include "qk0/quadratic_form.hpp"
#include "qk0/representation.hpp"

namespace qk0 {

/// The explicitly constructed isomorphisms backing the label calculus:
///   CxC       C + C  ->  C (x) C          ((1,0) -> (1 (x) 1 + i (x) i)/2)
///   HxC       C (x) H  ->  M_2(C)         (pi_{y,z}(x) = y x conj(z))
///   HxH       H (x) H  ->  M_4(k)         (pi_{y,z}(x) = y x conj(z))
///   AbsPlus   C'_{n+2}  ->  C_n (x) C'_2
///   AbsMinus  C_{n+2}  ->  C'_n (x) C_2
///   Hyp       C(q perp h)  ->  C(q) (x) C(h)
///   Scaled    C(b perp q)  ->  C(b) (x) C((ds b) q), binary b
enum class WitnessKind { CxC, HxC, HxH, AbsPlus, AbsMinus, Hyp, Scaled };

struct WitnessCase {
    WitnessKind kind = WitnessKind::CxC;
    unsigned n = 0;                // AbsPlus / AbsMinus size parameter
    SignatureForm q{};             // Hyp / Scaled form parameter
    std::array<int, 2> b{1, 1};    // Scaled binary form coefficients (+-1)
};

struct WitnessOutcome {
    std::string name;
    std::string field_desc;
    bool pass = false;
    std::uint32_t dim = 0;
    std::string detail; // failing relation / pair when !pass
};

std::string witness_name(const WitnessCase& c);

/// `WITNESS <name> field=<desc> PASS dim=<d>` or `... FAIL <detail>`.
std::string witness_certificate(const WitnessOutcome& o);

/// The canonical acceptance list: CxC, HxC, HxH; AbsPlus/AbsMinus for
/// n = 1..6; Hyp over every signature of rank <= 6; Scaled over the four
/// +-1 binary forms crossed with signatures of rank <= 3.
std::vector<WitnessCase> witness_suite_cases();

namespace detail {

template <FieldLike F>
SparseVec<F> conjugate(const F& k, const SparseVec<F>& x) {
    SparseVec<F> out;
    for (const auto& [i, c] : x.terms) out.terms.emplace_back(i, i == 0 ? c : k.neg(c));
    return out;
}

/// Verifies that basis-wise images define a k-algebra isomorphism
/// source -> target: unit preserved, multiplicative on every basis pair,
/// bijective (exact rank).
template <FieldLike F>
WitnessOutcome check_table_iso(const F& k, const AlgebraTable<F>& source,
                               const AlgebraTable<F>& target,
                               const std::vector<SparseVec<F>>& images) {
    WitnessOutcome out;
    out.dim = source.dim();
    out.field_desc = k.describe();
    if (source.dim() != target.dim()) {
        out.detail = "dimension mismatch";
        return out;
    }
    SparseVec<F> unit_image;
    for (const auto& [i, c] : source.unit().terms)
        unit_image = sparse_add(k, unit_image, sparse_scale(k, c, images[i]));
    if (!sparse_eq(k, unit_image, target.unit())) {
        out.detail = "unit not preserved";
        return out;
    }
    for (std::uint32_t i = 0; i < source.dim(); ++i)
        for (std::uint32_t j = 0; j < source.dim(); ++j) {
            auto lhs = target.mul(images[i], images[j]);
            SparseVec<F> rhs;
            if (!k.is_zero(source.product_coef(i, j)))
                rhs = sparse_scale(k, source.product_coef(i, j),
                                   images[source.product_index(i, j)]);
            if (!sparse_eq(k, lhs, rhs)) {
                out.detail = "relation=" + std::to_string(i) + "," + std::to_string(j);
                return out;
            }
        }
    DenseMatrix<F> M(k, target.dim(), source.dim());
    for (std::uint32_t col = 0; col < source.dim(); ++col)
        for (const auto& [row, c] : images[col].terms) M.at(row, col) = c;
    if (dense_rank(M) != source.dim()) {
        out.detail = "not bijective";
        return out;
    }
    out.pass = true;
    return out;
}

/// Same contract, but the map is specified on Clifford generators and
/// extended through extend_generator_map.
template <FieldLike F>
WitnessOutcome check_generator_iso(const F& k, const CliffordSpec<F>& source,
                                   const AlgebraTable<F>& target,
                                   const std::vector<SparseVec<F>>& gen_images) {
    WitnessOutcome out;
    out.dim = source.dim();
    out.field_desc = k.describe();
    auto ext = extend_generator_map(gen_images, source, target);
    if (!ext.ok) {
        out.detail = std::string(errc_name(ext.error)) + " relation=" +
                     std::to_string(ext.witness_pair.first) + "," +
                     std::to_string(ext.witness_pair.second);
        return out;
    }
    if (source.dim() != target.dim()) {
        out.detail = "dimension mismatch";
        return out;
    }
    if (dense_rank(ext.matrix.front()) != source.dim()) {
        out.detail = "not bijective";
        return out;
    }
    out.pass = true;
    return out;
}

template <FieldLike F>
DiagonalForm<F> signed_coeffs(const F& k, const std::vector<int>& signs) {
    std::vector<typename F::Elem> c;
    c.reserve(signs.size());
    for (int s : signs) c.push_back(s > 0 ? k.one() : k.neg(k.one()));
    return DiagonalForm<F>(k, std::move(c));
}

} // namespace detail

template <FieldLike F>
WitnessOutcome verify_witness_iso(const F& k, const WitnessCase& c) {
    using detail::signed_coeffs;
    const auto one = k.one();
    const auto minus_one = k.neg(k.one());
    const auto half = k.inv(k.from_int(2));

    const CliffordSpec<F> c_spec(signed_coeffs(k, {-1}));      // C: i^2 = -1
    const CliffordSpec<F> h_spec(signed_coeffs(k, {-1, -1}));  // H: i, j

    WitnessOutcome out;
    switch (c.kind) {
    case WitnessKind::CxC: {
        auto C = clifford_table(c_spec);
        auto S = direct_sum_table(C, C);
        auto T = tensor_table(C, C);
        // u = (1 (x) 1 + i (x) i)/2; basis of C (x) C: 1(x)1, 1(x)i, i(x)1, i(x)i.
        SparseVec<F> u, v;
        u.terms = {{0u, half}, {3u, half}};
        v.terms = {{0u, half}, {3u, k.neg(half)}};
        auto i_left = SparseVec<F>::basis(2, one);
        std::vector<SparseVec<F>> images{u, T.mul(i_left, u), v, T.mul(i_left, v)};
        out = detail::check_table_iso(k, S, T, images);
        break;
    }
    case WitnessKind::HxC: {
        auto C = clifford_table(c_spec);
        auto H = clifford_table(h_spec);
        auto S = tensor_table(C, H);             // basis y (x) z, index y*4 + z
        auto T = tensor_table(matrix_table(k, 2), C); // M_2(C), index (r*2+c)*2 + ic
        std::vector<SparseVec<F>> images;
        for (std::uint32_t y = 0; y < 2; ++y)
            for (std::uint32_t z = 0; z < 4; ++z) {
                // pi_{y,z}: x -> y x conj(z), as a 2x2 matrix over C in the
                // C-basis {1, j} of H (h = (a+bi)*1 + (c+di)*j).
                auto y_elt = SparseVec<F>::basis(y, one); // 1 or i inside H
                auto z_conj = detail::conjugate(k, SparseVec<F>::basis(z, one));
                SparseVec<F> img;
                for (std::uint32_t col = 0; col < 2; ++col) {
                    auto b = SparseVec<F>::basis(col == 0 ? 0u : 2u, one); // 1 or j
                    auto w = H.dense(H.mul(H.mul(y_elt, b), z_conj));
                    // gamma_{0,col} = w0 + w1 i, gamma_{1,col} = w2 + w3 i
                    for (std::uint32_t row = 0; row < 2; ++row) {
                        std::uint32_t cell = (row * 2 + col) * 2;
                        const auto& re = w[row * 2];
                        const auto& im = w[row * 2 + 1];
                        if (!k.is_zero(re)) img.terms.emplace_back(cell, re);
                        if (!k.is_zero(im)) img.terms.emplace_back(cell + 1, im);
                    }
                }
                images.push_back(sparse_normalize(k, std::move(img.terms)));
            }
        out = detail::check_table_iso(k, S, T, images);
        break;
    }
    case WitnessKind::HxH: {
        auto H = clifford_table(h_spec);
        auto S = tensor_table(H, H);
        auto T = matrix_table(k, 4);
        std::vector<SparseVec<F>> images;
        for (std::uint32_t y = 0; y < 4; ++y)
            for (std::uint32_t z = 0; z < 4; ++z) {
                auto y_elt = SparseVec<F>::basis(y, one);
                auto z_conj = detail::conjugate(k, SparseVec<F>::basis(z, one));
                SparseVec<F> img;
                for (std::uint32_t col = 0; col < 4; ++col) {
                    auto w = H.dense(H.mul(H.mul(y_elt, SparseVec<F>::basis(col, one)), z_conj));
                    for (std::uint32_t row = 0; row < 4; ++row)
                        if (!k.is_zero(w[row])) img.terms.emplace_back(row * 4 + col, w[row]);
                }
                images.push_back(sparse_normalize(k, std::move(img.terms)));
            }
        out = detail::check_table_iso(k, S, T, images);
        break;
    }
    case WitnessKind::AbsPlus: {
        std::vector<int> src(c.n + 2, 1);
        CliffordSpec<F> source(signed_coeffs(k, src));
        CliffordSpec<F> neg_n(signed_coeffs(k, std::vector<int>(c.n, -1)));
        CliffordSpec<F> pos_two(signed_coeffs(k, {1, 1}));
        auto target = tensor_table(clifford_table(neg_n), clifford_table(pos_two));
        std::vector<SparseVec<F>> images;
        images.push_back(SparseVec<F>::basis(1, one)); // 1 (x) e1'
        images.push_back(SparseVec<F>::basis(2, one)); // 1 (x) e2'
        for (unsigned i = 0; i < c.n; ++i)             // e_i (x) e1'e2'
            images.push_back(SparseVec<F>::basis((1u << i) * 4 + 3, one));
        out = detail::check_generator_iso(k, source, target, images);
        break;
    }
    case WitnessKind::AbsMinus: {
        std::vector<int> src(c.n + 2, -1);
        CliffordSpec<F> source(signed_coeffs(k, src));
        CliffordSpec<F> pos_n(signed_coeffs(k, std::vector<int>(c.n, 1)));
        CliffordSpec<F> neg_two(signed_coeffs(k, {-1, -1}));
        auto target = tensor_table(clifford_table(pos_n), clifford_table(neg_two));
        std::vector<SparseVec<F>> images;
        images.push_back(SparseVec<F>::basis(1, one)); // 1 (x) e1
        images.push_back(SparseVec<F>::basis(2, one)); // 1 (x) e2
        for (unsigned i = 0; i < c.n; ++i)             // e_i' (x) e1e2
            images.push_back(SparseVec<F>::basis((1u << i) * 4 + 3, one));
        out = detail::check_generator_iso(k, source, target, images);
        break;
    }
    case WitnessKind::Hyp: {
        std::vector<int> src;
        for (unsigned i = 0; i < c.q.plus; ++i) src.push_back(1);
        for (unsigned i = 0; i < c.q.minus; ++i) src.push_back(-1);
        const unsigned rank_q = static_cast<unsigned>(src.size());
        src.push_back(1); // hyperbolic plane f1, f2
        src.push_back(-1);
        CliffordSpec<F> source(signed_coeffs(k, src));
        std::vector<int> qs(src.begin(), src.begin() + rank_q);
        CliffordSpec<F> q_spec(signed_coeffs(k, qs));
        CliffordSpec<F> h(signed_coeffs(k, {1, -1}));
        auto target = tensor_table(clifford_table(q_spec), clifford_table(h));
        std::vector<SparseVec<F>> images;
        for (unsigned i = 0; i < rank_q; ++i) // e_i (x) f1 f2
            images.push_back(SparseVec<F>::basis((1u << i) * 4 + 3, one));
        images.push_back(SparseVec<F>::basis(1, one)); // 1 (x) f1
        images.push_back(SparseVec<F>::basis(2, one)); // 1 (x) f2
        out = detail::check_generator_iso(k, source, target, images);
        break;
    }
    case WitnessKind::Scaled: {
        std::vector<int> src{c.b[0], c.b[1]};
        for (unsigned i = 0; i < c.q.plus; ++i) src.push_back(1);
        for (unsigned i = 0; i < c.q.minus; ++i) src.push_back(-1);
        CliffordSpec<F> source(signed_coeffs(k, src));
        // ds b = -b1 b2 as a sign.
        const int ds_b = -c.b[0] * c.b[1];
        const auto d = ds_b > 0 ? one : minus_one;
        CliffordSpec<F> b_spec(signed_coeffs(k, {c.b[0], c.b[1]}));
        std::vector<int> scaled;
        for (unsigned i = 0; i < c.q.plus; ++i) scaled.push_back(ds_b);
        for (unsigned i = 0; i < c.q.minus; ++i) scaled.push_back(-ds_b);
        CliffordSpec<F> scaled_spec(signed_coeffs(k, scaled));
        auto target = tensor_table(clifford_table(b_spec), clifford_table(scaled_spec));
        const std::uint32_t dim_b = 1u << c.q.rank();
        std::vector<SparseVec<F>> images;
        images.push_back(SparseVec<F>::basis(1u * dim_b, one)); // g1 (x) 1
        images.push_back(SparseVec<F>::basis(2u * dim_b, one)); // g2 (x) 1
        for (unsigned i = 0; i < c.q.rank(); ++i)               // d^-1 g1g2 (x) ebar_i
            images.push_back(SparseVec<F>::basis(3u * dim_b + (1u << i), k.inv(d)));
        out = detail::check_generator_iso(k, source, target, images);
        break;
    }
    }
    out.name = witness_name(c);
    out.field_desc = k.describe();
    return out;
}

} // namespace qk0
