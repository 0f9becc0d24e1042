#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lapctl/graph.hpp"
#include "lapctl/matrix.hpp"

namespace lapctl {

// Threshold below which an eigenvector entry counts as zero, relative to
// the vector's max-norm.
inline constexpr double kZeroEntryRel = 1e-8;

struct EigDecomp {
  std::vector<double> values;  // ascending
  RealMatrix modal;            // column j is the eigenvector for values[j]
};

struct Eigenspace {
  double value = 0.0;
  std::vector<std::vector<double>> basis;  // orthonormal
  std::size_t multiplicity() const { return basis.size(); }
};

enum class EigenKernel { Parallel, SerialReference };

// Symmetric eigendecomposition by Jacobi rotations. Eigenvectors are unit
// length and sign-normalized (largest-magnitude entry positive, lowest index
// on ties), values ascending. Throws InvalidArgument on asymmetric input and
// ConvergenceError if the sweep cap is hit or a residual exceeds
// rtol * ||M||_inf.
EigDecomp eig_sym(const RealMatrix& m, double rtol = 1e-9,
                  EigenKernel kernel = EigenKernel::Parallel);
EigDecomp eig_sym(const IntMatrix& m, double rtol = 1e-9,
                  EigenKernel kernel = EigenKernel::Parallel);

double default_grouping_tol(std::span<const double> values);

// Clusters ascending eigenvalues whose adjacent gaps are <= gtol and
// re-orthonormalizes each cluster's basis. gtol <= 0 selects the default.
std::vector<Eigenspace> eigenspaces(const EigDecomp& dec, double gtol = 0.0);

// {0, 1, ..., k} minus {ceil(k/2)}, ascending.
std::vector<std::int64_t> antiregular_spectrum(std::size_t k);

// Integer eigenvectors of laplacian(gen_antiregular(k)). Column j (0-based)
// is the eigenvector for the (j+1)-th largest eigenvalue, which equals the
// (j+1)-th entry of the conjugate degree sequence. The last column is the
// all-ones vector.
IntMatrix antiregular_modal(std::size_t k);

// Orthogonal eigenvectors of laplacian(gen_path(k)):
// entry (j, i) = cos((i)(2j+1) pi / (2k)) for 0-based i, j. Column i pairs
// with eigenvalue 2 - 2 cos(i pi / k). Zeros of the cosine are exact.
RealMatrix path_modal(std::size_t k);
std::vector<double> path_spectrum(std::size_t k);

// Partial sums of the largest eigenvalues never exceed those of dstar.
bool check_majorization(std::span<const double> ascending_values,
                        const DegreeSequence& dstar);

// max_i |M v - lambda v|_i
double residual_inf(const RealMatrix& m, std::span<const double> v,
                    double lambda);
double norm_inf(const RealMatrix& m);
double max_abs(std::span<const double> v);
bool is_zero_entry(std::span<const double> v, std::size_t i);

}  // namespace lapctl
