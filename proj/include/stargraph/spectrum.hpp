#pragma once

#include "stargraph/common.hpp"
#include "stargraph/errors.hpp"

#include <algorithm>
#include <vector>

namespace stargraph {

enum class NumberingSource { computed, user_assigned };

struct SpectrumEntry {
    int n = 0;
    int k = 1;  // branch index, 1..m
    Complex lambda;
    int multiplicity = 1;      // shared-lambda count across (n,k) slots
    bool placeholder = false;  // template value not backed by a solver
};

/// Indexed multiset of eigenvalues. Each (n,k) slot carries exactly one
/// entry; a lambda of algebraic multiplicity mu occupies mu slots and each
/// of them records multiplicity = mu.
struct Spectrum {
    int m = 0;
    std::vector<SpectrumEntry> entries;
    NumberingSource source = NumberingSource::computed;
    int n_simple = 0;  // entries with n >= n_simple are all simple

    int shells() const {
        int top = -1;
        for (const auto& e : entries) top = std::max(top, e.n);
        return top + 1;
    }

    void sort_slots() {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return a.n != b.n ? a.n < b.n : a.k < b.k;
        });
    }

    void recompute_n_simple() {
        n_simple = 0;
        for (const auto& e : entries)
            if (e.multiplicity > 1) n_simple = std::max(n_simple, e.n + 1);
    }

    const SpectrumEntry& at(int n, int k) const {
        for (const auto& e : entries)
            if (e.n == n && e.k == k) return e;
        throw ValidationError("spectrum slot (" + std::to_string(n) + "," +
                              std::to_string(k) + ") missing");
    }

    /// Branch values lambda_{nk} for fixed k, n ascending (missing slots omitted).
    std::vector<Complex> branch(int k) const {
        std::vector<const SpectrumEntry*> sel;
        for (const auto& e : entries)
            if (e.k == k) sel.push_back(&e);
        std::sort(sel.begin(), sel.end(),
                  [](const auto* a, const auto* b) { return a->n < b->n; });
        std::vector<Complex> out;
        out.reserve(sel.size());
        for (const auto* e : sel) out.push_back(e->lambda);
        return out;
    }

    std::vector<Complex> flatten() const {
        std::vector<Complex> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.lambda);
        return out;
    }
};

}  // namespace stargraph
