#include "qrook/seminormal.hpp"

#include <exception>
#include <map>

#include "qrook/errors.hpp"

namespace qrook {

namespace {

RatFunc diagonal_coefficient(const Box& a, const Box& b, const ContentRule& rule, DiagonalRule diagonal) {
    if (diagonal == DiagonalRule::ThreeCase && a.component == b.component) {
        if (a.row == b.row) return RatFunc::q();
        if (a.col == b.col) return -RatFunc::q_power(-1);
    }
    RatFunc c1 = content(a, rule);
    RatFunc c2 = content(b, rule);
    if (c1 == c2)
        throw DegenerateContent("equal contents " + c1.to_string() + " at consecutive entries; the module is not defined here");
    return c2 * q_minus_qinv() / (c2 - c1);
}

}  // namespace

Representation seminormal_module(const Shape& shape, const ContentRule& rule, DiagonalRule diagonal) {
    Representation rep;
    rep.shape = shape;
    rep.k = shape_size(shape);
    rep.rule = rule;
    rep.diagonal = diagonal;
    rep.basis = enumerate_standard_tableaux(shape);

    const std::size_t d = rep.basis.size();
    std::map<StandardTableau, std::size_t> index;
    for (std::size_t j = 0; j < d; ++j) index.emplace(rep.basis[j], j);

    for (int i = 1; i <= rep.k; ++i) {
        Matrix<RatFunc> x(d, d);
        for (std::size_t j = 0; j < d; ++j) x(j, j) = content(rep.basis[j].at(i), rule);
        rep.matrices.emplace(Gen{GenKind::X, i, false}, std::move(x));
    }

    const RatFunc qinv = RatFunc::q_power(-1);
    for (int i = 1; i < rep.k; ++i) {
        Matrix<RatFunc> t(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto& L = rep.basis[j];
            RatFunc diag = diagonal_coefficient(L.at(i), L.at(i + 1), rule, diagonal);
            if (auto it = index.find(L.swapped(i)); it != index.end()) t(it->second, j) = qinv + diag;
            t(j, j) = std::move(diag);
        }
        rep.matrices.emplace(Gen{GenKind::T, i, false}, std::move(t));
    }
    return rep;
}

Representation calibrated_skew_module(const SkewShape& shape, int k) {
    if (shape.size() != k) throw InvalidArgument("calibrated_skew_module: shape has " + std::to_string(shape.size()) + " boxes, expected k=" + std::to_string(k));
    return seminormal_module(shape, ContentRule::plain(), DiagonalRule::Quotient);
}

Representation cyclotomic_module(const MultiPartition& lambda, const std::vector<RatFunc>& u) {
    if (static_cast<int>(u.size()) != lambda.r())
        throw InvalidArgument("cyclotomic_module: need one u parameter per component");
    return seminormal_module(lambda, ContentRule::cyclotomic(u), DiagonalRule::ThreeCase);
}

std::vector<Representation> cyclotomic_modules(const std::vector<MultiPartition>& shapes, const std::vector<RatFunc>& u) {
    std::vector<Representation> out(shapes.size());
    std::vector<std::exception_ptr> errors(shapes.size());
    const auto n = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = cyclotomic_module(shapes[idx], u);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

Representation shifted_skew_module(int k, int d, const RatFunc& u1) {
    if (d < 1 || d >= k) throw InvalidArgument("shifted_skew_module requires 1 <= d < k");
    if (u1.is_zero()) throw InvalidArgument("shifted_skew_module requires u1 != 0");
    Partition outer({k - 1, d});
    Partition inner = d > 1 ? Partition({d - 1}) : Partition();
    return seminormal_module(SkewShape(outer, inner), ContentRule::shifted(u1), DiagonalRule::Quotient);
}

std::vector<RestrictionBlock> restrict(const Representation& rep) {
    if (rep.k < 1) throw InvalidArgument("restrict needs k >= 1");
    std::map<Box, RestrictionBlock> blocks;
    for (std::size_t j = 0; j < rep.basis.size(); ++j) {
        const Box& b = rep.basis[j].at(rep.k);
        auto it = blocks.find(b);
        if (it == blocks.end()) it = blocks.emplace(b, RestrictionBlock{b, remove_box(rep.shape, b), {}}).first;
        it->second.indices.push_back(j);
    }
    std::vector<RestrictionBlock> out;
    for (auto& [b, blk] : blocks) out.push_back(std::move(blk));
    return out;
}

Assignment<RatFunc> block_assignment(const Representation& rep, const RestrictionBlock& block) {
    Assignment<RatFunc> out;
    for (const auto& [g, m] : rep.matrices) {
        if (g.kind == GenKind::X && g.index >= rep.k) continue;
        if (g.kind == GenKind::T && g.index >= rep.k - 1) continue;
        out.emplace(g, submatrix(m, std::span<const std::size_t>(block.indices)));
    }
    return out;
}

}  // namespace qrook
