#include "chiralspin/chiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chiralspin/errors.hpp"

namespace chiralspin {

double default_pairing_tolerance(const ComplexMatrix& h) {
    return 1e-9 * std::max(1.0, frobenius_norm(h));
}

std::string_view to_string(SymmetryKind kind) {
    switch (kind) {
    case SymmetryKind::Commuting: return "Commuting";
    case SymmetryKind::Anticommuting: return "Anticommuting";
    case SymmetryKind::Both: return "Both";
    case SymmetryKind::Neither: return "Neither";
    }
    return "Neither";
}

SymmetryVerdict classify(const ComplexMatrix& c, const ComplexMatrix& h, double tol) {
    if (c.dim() != h.dim()) throw DimensionError("classify: dimension mismatch");
    const ComplexMatrix ch = c * h;
    const ComplexMatrix hc = h * c;
    const double scale = frobenius_norm(c) * frobenius_norm(h);

    SymmetryVerdict v;
    if (scale > 0.0) {
        v.residual_commute = frobenius_norm(ch - hc) / scale;
        v.residual_anticommute = frobenius_norm(ch + hc) / scale;
    }
    const bool commutes = v.residual_commute < tol;
    const bool anticommutes = v.residual_anticommute < tol;
    if (commutes && anticommutes) {
        v.kind = SymmetryKind::Both;
    } else if (commutes) {
        v.kind = SymmetryKind::Commuting;
    } else if (anticommutes) {
        v.kind = SymmetryKind::Anticommuting;
    } else {
        v.kind = SymmetryKind::Neither;
    }
    return v;
}

PairingReport pairing_check(std::span<const double> eigenvalues, double tol_pair, double tol_zero) {
    PairingReport report;
    const std::size_t n = eigenvalues.size();
    bool paired = true;
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double low = eigenvalues[i];
        const double high = eigenvalues[n - 1 - i];
        const double mismatch = std::abs(low + high);
        report.pairs.push_back({high, low, mismatch});
        report.max_mismatch = std::max(report.max_mismatch, mismatch);
        if (!(mismatch < tol_pair)) paired = false;
    }
    if (n % 2 == 1 && !(std::abs(eigenvalues[n / 2]) < tol_zero)) paired = false;
    report.zero_modes = static_cast<std::size_t>(
        std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double x) { return std::abs(x) < tol_zero; }));
    report.is_chiral_paired = paired;
    return report;
}

ChiralMapReport chiral_map_check(const ComplexMatrix& c, const ComplexMatrix& h, double tol) {
    const SymmetryVerdict verdict = classify(c, h, tol);
    if (verdict.kind != SymmetryKind::Anticommuting && verdict.kind != SymmetryKind::Both) {
        throw PreconditionError("chiral_map_check: operator does not anticommute with H (" +
                                std::string(to_string(verdict.kind)) + ")");
    }
    const EigenDecomposition eig = hermitian_eigensolve(h);
    const double tol_zero = default_pairing_tolerance(h);

    ChiralMapReport report;
    report.tolerance = 1e-9 * frobenius_norm(h);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (std::abs(lambda) <= tol_zero) continue;
        const std::vector<Complex> psi = eig.eigenvectors.column(k);
        const std::vector<Complex> mapped = c * std::span<const Complex>(psi);
        std::vector<Complex> residual = h * std::span<const Complex>(mapped);
        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += lambda * mapped[i];
        report.max_residual = std::max(report.max_residual, vector_norm(residual));
        ++report.states_checked;
    }
    report.ok = report.max_residual < report.tolerance || report.states_checked == 0;
    return report;
}

CandidateFamily CandidateFamily::defaults() {
    return CandidateFamily{{UnitVector::x(), UnitVector::y(), UnitVector::z()},
                           {std::numbers::pi, std::numbers::pi / 2}};
}

std::vector<PartnerMatch> search_partners(const ComplexMatrix& h, std::span<const std::size_t> dims,
                                          const CandidateFamily& family, double tol) {
    if (dims.empty() || product_dimension(dims) != h.dim()) {
        throw DimensionError("search_partners: subsystem dimensions do not multiply to " + std::to_string(h.dim()));
    }
    // Per-slot options: index 0 = no rotation, then axis-major (axis, angle).
    const std::size_t per_slot = 1 + family.axes.size() * family.angles.size();
    std::vector<std::vector<ComplexMatrix>> slot_mats(dims.size());
    for (std::size_t s = 0; s < dims.size(); ++s) {
        const SpinOperators ops = build_spin_operators(SpinLabel(static_cast<int>(dims[s]) - 1));
        slot_mats[s].push_back(ComplexMatrix::identity(dims[s]));
        for (const auto& axis : family.axes) {
            for (double angle : family.angles) slot_mats[s].push_back(rotation_matrix(axis, angle, ops));
        }
    }

    std::vector<PartnerMatch> found;
    std::vector<std::size_t> choice(dims.size(), 0);
    while (true) {
        // Advance odometer; slot 0 is the most significant digit.
        std::size_t s = dims.size();
        while (s > 0) {
            --s;
            if (++choice[s] < per_slot) break;
            choice[s] = 0;
            if (s == 0) return found;
        }

        ComplexMatrix c = ComplexMatrix::identity(1);
        std::vector<RotationSpec> factors;
        for (std::size_t slot = 0; slot < dims.size(); ++slot) {
            c = kron(c, slot_mats[slot][choice[slot]]);
            if (choice[slot] != 0) {
                const std::size_t idx = choice[slot] - 1;
                factors.push_back({slot, family.axes[idx / family.angles.size()],
                                   family.angles[idx % family.angles.size()]});
            }
        }
        const SymmetryVerdict verdict = classify(c, h, tol);
        if (verdict.kind == SymmetryKind::Anticommuting) {
            found.push_back({CompositeRotation(std::move(factors)), verdict});
        }
    }
}

OddTraceReport trace_oddpower_check(const ComplexMatrix& h, int max_power) {
    require_hermitian(h, "trace_oddpower_check");
    const double norm = frobenius_norm(h);
    const ComplexMatrix h2 = h * h;
    ComplexMatrix power = h;
    OddTraceReport report;
    for (int k = 1; k <= max_power; k += 2) {
        if (k > 1) power = power * h2;
        OddTraceReport::Entry e;
        e.power = k;
        e.trace = trace(power);
        e.bound = 1e-9 * std::pow(norm, k);
        e.vanishes = std::abs(e.trace) <= e.bound;
        report.all_vanish = report.all_vanish && e.vanishes;
        report.entries.push_back(e);
    }
    return report;
}

} // namespace chiralspin
