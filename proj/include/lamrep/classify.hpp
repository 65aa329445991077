#pragma once

#include <optional>
#include <vector>

#include "lamrep/endo.hpp"
#include "lamrep/strata.hpp"

namespace lamrep {

// Size of the classification list for Lambda(m,n), counting transposed
// orientations separately.  Matches the list length for m, n >= 3; below
// that some families truncate differently and the list itself is the truth.
long long count_formula(int m, int n);

// The finite list of general indecomposables of Lambda(m,n): the five
// parameter families over their exact ranges, plus the transpose-duals of
// the 1x2, 2x2, 2x3 and 3x3 families (the 1x1 family is transpose-closed and
// appears once).  Deterministic order: families as listed, primary
// orientation before transposed, parameters ascending.
std::vector<GeneralIndecomposable> list_general_indecomposables(int m, int n);

struct ReportEntry {
    GeneralIndecomposable entry;
    std::optional<long> endo_dim;
    std::optional<int> dim_top;
    std::optional<bool> is_local;
    std::optional<long> orbit;
    std::optional<bool> dense_orbit;

    bool certified() const {
        return is_local && *is_local && dense_orbit && *dense_orbit;
    }
};

struct ClassificationReport {
    int m = 0, n = 0;
    bool wild = false;           // representation type of Lambda(m,n)
    bool with_certificates = false;
    std::vector<ReportEntry> entries;
    long long total = 0;         // with orientation multiplicity
    long long formula = 0;
    std::optional<long long> dedup_total;  // distinct (p, q) strata
};

// (m,n) outside the representation-finite/tame region of the two-vertex
// quotient list: wild unless (m,n) <= (4,4), (6,3) or (3,6) componentwise.
bool is_wild(int m, int n);

// Builds the report; with certify, computes End, locality and the
// dense-orbit equality orbit_dim = stratum_dim for every entry and throws
// CertificateFailure naming the first failing entry (which would contradict
// the classification and is treated as a build-blocking defect).
ClassificationReport classify_report(int m, int n, bool certify, bool dedup);

// Certificates for one entry, over Q.
ReportEntry certify_entry(GeneralIndecomposable g);

}  // namespace lamrep
