#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/core_math.hpp"

namespace ccx {

enum class Provenance { Paper, Trivial, Derived };

std::string to_string(Provenance p);

struct LedgerEntry {
    std::string name;
    std::string expected;
    std::string computed;
    bool match = false;
    Provenance tag = Provenance::Derived;
};

struct VerificationLedger {
    std::vector<LedgerEntry> entries;
    bool overall = true;

    void add(std::string name, std::string expected, std::string computed,
             Provenance tag);
    /// Canonical assembly order: sorted by entry name.
    void finalize();

    std::string to_table() const;
    std::string to_json() const;
};

/// Recomputes every numeric example of the source results: the four
/// matroid / type-B h-vector examples, the B_3 characteristic polynomial,
/// and the M-vector failures.  An optional corrupt_entry perturbs that
/// entry's stored expected value (testing aid for the exit-code contract).
VerificationLedger verify_paper_examples(const std::string& corrupt_entry = "");

/// Direct-vs-formula cross-validation: coloring and unipolar h-vectors on
/// the graph corpus, reduced Betti numbers (n <= 6), and the type-B bridge
/// on all subarrangements of B_2 and B_3.
VerificationLedger verify_bridges(int max_n, std::uint64_t seed);

/// The three convex-ear inequalities on every corpus instance.
VerificationLedger verify_inequalities(int max_n, std::uint64_t seed);

}  // namespace ccx
