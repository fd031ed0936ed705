#include "ame/measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ame/detail/combinations.hpp"

namespace ame {

namespace {

constexpr double kPsdDiagnosticTol = 1e-10;

// Validates 1-based qubit indices and returns them sorted ascending.
std::vector<std::size_t> checked_sorted_indices(std::size_t n,
                                                std::vector<std::size_t> indices) {
    if (indices.empty()) {
        throw EmptySubset("qubit subset must be nonempty");
    }
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || indices[i] > n) {
            throw IndexOutOfRange("qubit index outside [1, n]");
        }
        if (i > 0 && indices[i] == indices[i - 1]) {
            throw IndexOutOfRange("duplicate qubit index in subset");
        }
    }
    return indices;
}

// Bitmask over basis indices with one bit per listed qubit; qubit q
// occupies bit n - q (qubit 1 is the most significant bit).
std::size_t qubit_mask(std::size_t n, const std::vector<std::size_t>& qubits) {
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        mask |= std::size_t{1} << (n - q);
    }
    return mask;
}

}  // namespace

Bipartition::Bipartition(std::size_t num_qubits, std::vector<std::size_t> subset_a)
    : num_qubits_(num_qubits),
      subset_a_(checked_sorted_indices(num_qubits, std::move(subset_a))) {
    if (subset_a_.size() >= num_qubits_) {
        throw EmptySubset("subset A must leave a nonempty complement");
    }
}

std::vector<std::size_t> Bipartition::subset_b() const {
    std::vector<std::size_t> b;
    b.reserve(num_qubits_ - subset_a_.size());
    std::size_t next = 0;
    for (std::size_t q = 1; q <= num_qubits_; ++q) {
        if (next < subset_a_.size() && subset_a_[next] == q) {
            ++next;
        } else {
            b.push_back(q);
        }
    }
    return b;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    const std::size_t n = rho.num_qubits();
    const std::vector<std::size_t> kept = checked_sorted_indices(n, keep);

    std::vector<std::size_t> traced;
    traced.reserve(n - kept.size());
    std::size_t next = 0;
    for (std::size_t q = 1; q <= n; ++q) {
        if (next < kept.size() && kept[next] == q) {
            ++next;
        } else {
            traced.push_back(q);
        }
    }

    const std::size_t k = kept.size();
    const std::size_t out_dim = std::size_t{1} << k;
    const std::size_t trace_dim = std::size_t{1} << traced.size();

    // Expansion tables: output / summation index -> source basis bits.
    std::vector<std::size_t> kept_expand(out_dim, 0);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t pos = 0; pos < k; ++pos) {
            if ((r >> (k - 1 - pos)) & 1u) {
                kept_expand[r] |= std::size_t{1} << (n - kept[pos]);
            }
        }
    }
    std::vector<std::size_t> traced_expand(trace_dim, 0);
    for (std::size_t t = 0; t < trace_dim; ++t) {
        for (std::size_t pos = 0; pos < traced.size(); ++pos) {
            if ((t >> (traced.size() - 1 - pos)) & 1u) {
                traced_expand[t] |= std::size_t{1} << (n - traced[pos]);
            }
        }
    }

    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex sum(0.0, 0.0);
            for (std::size_t t = 0; t < trace_dim; ++t) {
                sum += rho.matrix()(kept_expand[r] | traced_expand[t],
                                    kept_expand[c] | traced_expand[t]);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix(k, std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part) {
    if (part.num_qubits() != rho.num_qubits()) {
        throw DimensionMismatch("bipartition qubit count differs from state");
    }
    const std::size_t n = rho.num_qubits();
    const std::size_t dim = rho.dim();
    const std::size_t a_mask = qubit_mask(n, part.subset_a());
    const std::size_t b_mask = (dim - 1) & ~a_mask;

    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t pi = (i & a_mask) | (j & b_mask);
            const std::size_t pj = (j & a_mask) | (i & b_mask);
            out(pi, pj) = rho.matrix()(i, j);
        }
    }
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum s = hermitian_spectrum(rho.matrix());
    double entropy = 0.0;
    for (double lambda : s.eigenvalues) {
        if (lambda < -kPsdDiagnosticTol) {
            throw NotPSD("density matrix eigenvalue below -1e-10");
        }
        if (lambda <= 0.0) {
            continue;  // clamped to 0, with 0 log 0 := 0
        }
        entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

double log_negativity(const DensityMatrix& rho, const Bipartition& part) {
    return std::log2(trace_norm_hermitian(partial_transpose(rho, part)));
}

CoherentInfo coherent_information(const DensityMatrix& rho, const Bipartition& part) {
    return coherent_information(rho, part, von_neumann_entropy(rho));
}

CoherentInfo coherent_information(const DensityMatrix& rho, const Bipartition& part,
                                  double entropy_ab) {
    if (part.num_qubits() != rho.num_qubits()) {
        throw DimensionMismatch("bipartition qubit count differs from state");
    }
    const double s_a = von_neumann_entropy(partial_trace(rho, part.subset_a()));
    const double s_b = von_neumann_entropy(partial_trace(rho, part.subset_b()));
    CoherentInfo info;
    info.a_to_b = s_b - entropy_ab;
    info.b_to_a = s_a - entropy_ab;
    info.max_directed = std::max(info.a_to_b, info.b_to_a);
    return info;
}

MeasureRecord evaluate_measures(const DensityMatrix& rho, const Bipartition& part) {
    return evaluate_measures(rho, part, von_neumann_entropy(rho));
}

MeasureRecord evaluate_measures(const DensityMatrix& rho, const Bipartition& part,
                                double entropy_ab) {
    const CoherentInfo info = coherent_information(rho, part, entropy_ab);
    MeasureRecord rec;
    rec.log_negativity = log_negativity(rho, part);
    rec.coherent_info_a_to_b = info.a_to_b;
    rec.coherent_info_b_to_a = info.b_to_a;
    rec.coherent_info_max = info.max_directed;
    return rec;
}

bool is_ame(const PureState& s, double tol) {
    const DensityMatrix rho = density(s);
    const std::size_t n = s.num_qubits();
    for (std::size_t m = 1; m <= n / 2; ++m) {
        for (const auto& subset : detail::subsets(n, m)) {
            const double entropy = von_neumann_entropy(partial_trace(rho, subset));
            if (entropy < static_cast<double>(m) - tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ame
