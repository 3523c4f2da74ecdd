#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "chiralspin/linalg.hpp"
#include "chiralspin/rotations.hpp"

namespace chiralspin {

/// Default classification tolerance on relative residuals.
inline constexpr double kClassifyTol = 1e-10;

/// Pairing/zero-mode tolerance scaled to the Hamiltonian: 1e-9 * max(1, ||H||_F).
double default_pairing_tolerance(const ComplexMatrix& h);

enum class SymmetryKind { Commuting, Anticommuting, Both, Neither };

std::string_view to_string(SymmetryKind kind);

struct SymmetryVerdict {
    SymmetryKind kind = SymmetryKind::Neither;
    double residual_commute = 0.0;     // ||[C,H]||_F / (||C||_F ||H||_F)
    double residual_anticommute = 0.0; // ||{C,H}||_F / (||C||_F ||H||_F)
};

/// Residuals are zero when ||C||_F ||H||_F = 0, which yields Both.
SymmetryVerdict classify(const ComplexMatrix& c, const ComplexMatrix& h, double tol = kClassifyTol);

struct EigenPair {
    double plus = 0.0;  // from the top of the sorted list
    double minus = 0.0; // mirror entry from the bottom
    double mismatch = 0.0;
};

struct PairingReport {
    std::vector<EigenPair> pairs;
    std::size_t zero_modes = 0;
    bool is_chiral_paired = false;
    double max_mismatch = 0.0;
};

/// Pairs the sorted spectrum from both ends inward. For odd length the middle
/// value must be a zero mode. Zero modes are counted over the whole list.
PairingReport pairing_check(std::span<const double> eigenvalues, double tol_pair, double tol_zero);

struct ChiralMapReport {
    bool ok = true;
    std::size_t states_checked = 0;
    double max_residual = 0.0; // max ||H (C psi) + lambda (C psi)|| over checked states
    double tolerance = 0.0;
};

/// For each eigenpair (lambda, psi) of H with |lambda| > tol_zero, checks that
/// C psi is an eigenvector at -lambda. Requires classify(C, H) to report
/// Anticommuting (or Both); throws PreconditionError otherwise.
ChiralMapReport chiral_map_check(const ComplexMatrix& c, const ComplexMatrix& h, double tol = kClassifyTol);

struct CandidateFamily {
    std::vector<UnitVector> axes;
    std::vector<double> angles;

    /// Axes x, y, z and angles pi, pi/2.
    static CandidateFamily defaults();
};

struct PartnerMatch {
    CompositeRotation rotation;
    SymmetryVerdict verdict;
};

/// Enumerates every assignment of (axis, angle) or no rotation to each slot,
/// skipping the all-identity candidate, and keeps the Anticommuting ones.
/// Output order follows the enumeration (slot 0 most significant; per slot:
/// none, then axes in order with angles in order).
std::vector<PartnerMatch> search_partners(const ComplexMatrix& h, std::span<const std::size_t> dims,
                                          const CandidateFamily& family = CandidateFamily::defaults(),
                                          double tol = kClassifyTol);

struct OddTraceReport {
    struct Entry {
        int power = 0;
        Complex trace;
        double bound = 0.0; // 1e-9 * ||H||_F^power
        bool vanishes = false;
    };
    std::vector<Entry> entries;
    bool all_vanish = true;
};

/// trace(H^k) for odd k <= max_power.
OddTraceReport trace_oddpower_check(const ComplexMatrix& h, int max_power);

} // namespace chiralspin
