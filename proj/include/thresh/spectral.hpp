#pragma once

#include <vector>

#include "thresh/graph.hpp"

namespace thresh {

// Spectrum of the normalized adjacency matrix M = D^{-1/2} A D^{-1/2}.
struct SpectralProfile {
  std::vector<double> eigenvalues;  // descending; eigenvalues.front() is 1
  double sigma = 0.0;               // max over i >= 2 of |lambda_i|
  double gamma = 1.0;               // min degree / max degree
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  // Eigenvalue 1 has multiplicity > 1, so sigma is 1 however the other
  // eigenvalues look.
  bool disconnected = false;
  double tolerance = 0.0;
};

// Dense symmetric eigendecomposition. Throws PreconditionError if the graph
// has an isolated node (D is singular).
SpectralProfile normalized_spectrum(const Graph& g);

double sigma(const Graph& g);

// delta / Delta; needs no spectrum. Throws PreconditionError if Delta = 0.
double gamma(const Graph& g);

}  // namespace thresh
