#pragma once

#include <cstddef>
#include <vector>

#include "pelltriples/classgroup.hpp"
#include "pelltriples/intkernel.hpp"

namespace pelltriples {

// Even-index denominators of the convergents of sqrt(2):
// 1, 5, 29, 169, 985, 5741, ... via k' = 6k - k''.
std::vector<Int> sqrt2_even_denominators(std::size_t count);

struct Candidate {
    unsigned s = 0;
    Int k_prev;
    Int k_next;
    Int a;
    Int b;
    Int c;
    Int m;
    bool satisfies_m_gt_c = false;
};

// Candidates (m, a, b, c) built from consecutive even-index denominators,
// with m the squarefree part of k_prev * k_next. All invariants
// (c - a = k_prev, c + a = k_next, c^2 = 2a^2 + 1, a^2 - m b^2 = -1, ...)
// are re-verified on construction.
std::vector<Candidate> scan_candidates(std::size_t max_s, const FactorConfig& config = {});

struct TableRow {
    Candidate candidate;
    TorsionCertificate certificate;
};

// Candidates with m > c, each with its order-2 certificate. A refusal is a
// hard failure.
std::vector<TableRow> reproduce_table(std::size_t max_s, const FactorConfig& config = {});

}  // namespace pelltriples
