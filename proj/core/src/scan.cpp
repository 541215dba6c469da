#include "pelltriples/scan.hpp"

#include <stdexcept>
#include <string>

#include "pelltriples/errors.hpp"
#include "pelltriples/triplegroup.hpp"

namespace pelltriples {

namespace {

void check_candidate(const Candidate& cand) {
    bool ok = cand.c - cand.a == cand.k_prev && cand.c + cand.a == cand.k_next &&
              cand.c * cand.c == 2 * cand.a * cand.a + 1 &&
              cand.m * cand.b * cand.b == cand.k_prev * cand.k_next &&
              cand.a * cand.a - cand.m * cand.b * cand.b == -1 &&
              cand.a * cand.a + cand.m * cand.b * cand.b == cand.c * cand.c;
    if (!ok)
        throw ContractViolation("candidate s=" + std::to_string(cand.s) +
                                " violates its invariants");
}

}  // namespace

std::vector<Int> sqrt2_even_denominators(std::size_t count) {
    if (count < 2) throw std::invalid_argument("count must be at least 2");
    std::vector<Int> ks;
    ks.reserve(count);
    ks.push_back(1);
    ks.push_back(5);
    while (ks.size() < count) {
        Int next = 6 * ks[ks.size() - 1] - ks[ks.size() - 2];
        ks.push_back(std::move(next));
    }
    return ks;
}

std::vector<Candidate> scan_candidates(std::size_t max_s, const FactorConfig& config) {
    if (max_s < 1) throw std::invalid_argument("max_s must be at least 1");
    std::vector<Int> ks = sqrt2_even_denominators(max_s + 1);
    std::vector<Candidate> out;
    out.reserve(max_s);
    for (std::size_t s = 1; s <= max_s; ++s) {
        Candidate cand;
        cand.s = static_cast<unsigned>(s);
        cand.k_prev = ks[s - 1];
        cand.k_next = ks[s];
        cand.a = (cand.k_next - cand.k_prev) / 2;
        cand.c = (cand.k_next + cand.k_prev) / 2;
        try {
            SquarefreeSplit split = squarefree_part(cand.k_prev * cand.k_next, config);
            cand.m = split.squarefree;
            cand.b = split.root;
        } catch (const FactorTimeout& e) {
            throw FactorTimeout("candidate s=" + std::to_string(s) + ": " + e.what());
        }
        cand.satisfies_m_gt_c = cand.m > cand.c;
        check_candidate(cand);
        out.push_back(std::move(cand));
    }
    return out;
}

std::vector<TableRow> reproduce_table(std::size_t max_s, const FactorConfig& config) {
    std::vector<TableRow> rows;
    for (Candidate& cand : scan_candidates(max_s, config)) {
        if (!cand.satisfies_m_gt_c) continue;
        GroupContext ctx(cand.m, config);
        PrimitiveTriple triple = normalize(ctx, cand.a, cand.b, cand.c);
        TableRow row;
        row.certificate = certify_order_two(ctx, triple);
        row.candidate = std::move(cand);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pelltriples
