#pragma once

#include <random>
#include <string>
#include <vector>

#include "lcz/checks.hpp"
#include "lcz/classify.hpp"
#include "lcz/families.hpp"

namespace lcz::test {

// <[X,Rv],w> + <[w,Rv],X> + <[w,X],Rv> - <[X,v],Rw> - <[Rw,v],X> - <[Rw,X],v>
Scalar six_term(const PseudoEuclideanLieAlgebra& g, const Matrix& Ric, const Vector& X, const Vector& v,
                const Vector& w);

// Lifts a vector of the first k coordinates into R^n.
Vector embed(const Vector& x, std::size_t n);

// 2-dim solvable [H,y1] = y1 with metric c*Id.
PseudoEuclideanLieAlgebra affine_plane(Backend b, const Scalar& c);

// Canonical (A0, G0) of a given type.
struct CanonicalSample {
  OperatorType type;
  std::vector<double> alphas;
  double a = 0, b = 0;
  int sign = 1;
  Matrix A, G;
};
CanonicalSample random_canonical(OperatorType t, std::size_t n, std::mt19937_64& rng);

// Q with Q^T G Q = G: exponential of a random G-skew matrix.
Matrix random_isometry(const Matrix& G, std::mt19937_64& rng, double scale = 0.6);

struct Perturbed {
  std::string label;
  PseudoEuclideanLieAlgebra g;
};

struct FamilyInstance {
  std::string name;
  FamilyResult base;
};
std::vector<FamilyInstance> family_instances();

// Metric or bracket changes that break one harmonic-curvature constraint each.
std::vector<Perturbed> structured_perturbations(const std::string& family);
// Changes that leave the algebra harmonic (isometric to a family member or a
// product of harmonic factors); used for agreement only.
std::vector<Perturbed> neutral_perturbations(const std::string& family);

struct Verdicts {
  bool raw = false, solved = false, codazzi = false;
  OperatorType type = OperatorType::Diag;
};
// Conditions evaluated on the Ricci decomposition obtained by classification.
Verdicts verdicts(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
Verdicts verdicts(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d, const Tolerance& tol = {});

double inf_norm(const Matrix& m);

}  // namespace lcz::test

namespace lcz::test {

// Conjugates a random canonical pair by a random isometry, classifies it and
// compares type, eigen-data and reconstruction against the sample.
struct RoundTrip {
  bool ok = true;
  std::string why;
  double residual = 0;  // |P^-1 A0 P - A| / |A|
};
RoundTrip round_trip_once(OperatorType t, std::size_t n, std::mt19937_64& rng, double tol = 1e-7);

}  // namespace lcz::test
