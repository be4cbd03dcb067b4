#ifndef DAGREL_MATCAT_MATCAT_HPP
#define DAGREL_MATCAT_MATCAT_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dagrel/core/concepts.hpp"
#include "dagrel/core/diagram.hpp"
#include "dagrel/core/dual.hpp"
#include "dagrel/core/rng.hpp"
#include "dagrel/pinj/pinj.hpp"
#include "json.hpp"

namespace dagrel::matcat {

// A morphism m -> n is an n x m real matrix; composition is the product and
// the dagger is transposition.  Zero-dimensional objects are allowed.
using Matrix = Eigen::MatrixXd;

// All equality comparisons use the max-norm of the residual against eq_tol;
// rank decisions threshold eigenvalues at rank_tol (relative to the largest,
// floored at 1); contraction checks allow norm_slack above 1.
struct Tolerances {
  double eq_tol = 1e-8;
  double rank_tol = 1e-10;
  double norm_slack = 1e-9;
};

double max_abs(const Matrix& m);

// Largest singular value; symmetric eigensolver on the smaller Gram matrix
// for desk-scale sizes, power iteration beyond.
double operator_norm(const Matrix& m);

bool is_contractive(const Matrix& m, const Tolerances& tol = {});

// The full pieces of the codilator construction for a contraction R: the
// rank d of 1 - R^T R, a factor E (d x m) with E^T E = 1 - R^T R, a right
// inverse M with E M = 1, and the cospan legs [E; R] and [0; 1].
struct CodilatorParts {
  int rank = 0;
  Matrix factor;         // E
  Matrix right_inverse;  // M
  Cospan<Matrix> cospan;
  double psd_defect = 0;       // most negative eigenvalue of 1 - R^T R seen
  double factor_residual = 0;  // max-norm of E^T E - (1 - R^T R)
};

CodilatorParts codilator_parts(const Matrix& r, const Tolerances& tol = {});

// Relative orthogonality of Col A and Col B with respect to their common
// subspace Col(AU): the defining criterion max|A^T B - U V^T| <= eq_tol.
// The equivalent orthogonal-complement criterion A^T (1 - P) B = 0 with
// P the projector onto Col(AU) is exposed separately for cross-checking.
bool relatively_orthogonal(const Matrix& a, const Matrix& b, const Matrix& u,
                           const Matrix& v, const Tolerances& tol = {});
double rel_orth_residual_direct(const Matrix& a, const Matrix& b, const Matrix& u,
                                const Matrix& v);
double rel_orth_residual_complement(const Matrix& a, const Matrix& b, const Matrix& u,
                                    const Matrix& v);

// Co-independent pushout of a span of isometries (U : k -> m, V : k -> n):
// the codilator of V U^T.
Cospan<Matrix> coind_pushout(const Matrix& u, const Matrix& v, const Tolerances& tol = {});

// Whether the columns of [F G] span the whole target space.
bool jointly_epic(const Matrix& f, const Matrix& g, const Tolerances& tol = {});

// (monic, jointly epic) factorisation of a cospan of isometries into R^p:
// an orthonormal basis Q of Col F + Col G with F = Q (Q^T F), G = Q (Q^T G).
CoFactorisation<Matrix> cofactorize(const Matrix& f, const Matrix& g,
                                    const Tolerances& tol = {});

// Contractive real matrices as a dagger category.  The codilator of R stacks
// the defect factor over R; the canonical comediator of a codilation (A, B)
// is [(A - B R) M  B].
class MatCat {
 public:
  using Obj = int;
  using Mor = Matrix;

  MatCat() = default;
  explicit MatCat(Tolerances tol) : tol_(tol) {}

  const Tolerances& tolerances() const { return tol_; }

  Obj dom(const Mor& f) const { return static_cast<int>(f.cols()); }
  Obj cod(const Mor& f) const { return static_cast<int>(f.rows()); }
  Mor identity(const Obj& x) const { return Matrix::Identity(x, x); }
  Mor compose(const Mor& g, const Mor& f) const;
  Mor dagger(const Mor& f) const { return f.transpose(); }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  bool mor_eq(const Mor& f, const Mor& g) const;
  std::string obj_label(const Obj& x) const { return std::to_string(x); }
  std::string mor_desc(const Mor& f) const;
  void validate(const Mor& f) const;

  Cospan<Mor> codilator(const Mor& r) const { return codilator_parts(r, tol_).cospan; }
  Mor comediate_canonical(const Mor& r, const Cospan<Mor>& codilation) const;

 private:
  Tolerances tol_;
};

// The finite l2 functor: a partial injection r : [m] -> [n] becomes the n x m
// 0/1 matrix with a 1 at (ri, i) for i in supp r.  Requires the canonical
// segment objects so indices and labels agree.
Matrix l2(const pinj::PartialInjection& r);

std::string rel_span_key(const DualCat<MatCat>& cat, const Span<Matrix>& sp);

// JSON schema: {"rows": n, "cols": m, "entries": [[...], ...]}
Matrix from_json(const nlohmann::json& j);
nlohmann::json to_json(const Matrix& m);
// Aligned plain-text rendering for terminal output.
std::string pretty(const Matrix& m, int precision = 6);

// Random contractions built from deterministic Gaussian factors with
// singular values in [0, 1], including exact-isometry and near-defect edge
// cases.
class BaseSampler {
 public:
  BaseSampler(std::uint64_t seed, int max_dim = 5);
  std::uint64_t seed() const { return seed_; }
  int random_object();
  Matrix random_mor();
  Matrix random_mor_from(const int& m);
  Matrix random_mor_between(const int& m, const int& n);
  Matrix random_isometry(int from, int to);  // to x from, orthonormal columns
  Matrix random_unitary(int n);

 private:
  std::uint64_t seed_;
  Rng rng_;
  int max_dim_;
  Matrix gaussian(int rows, int cols);
};

// The same distribution in the dual orientation.
class DualBaseSampler {
 public:
  DualBaseSampler(std::uint64_t seed, int max_dim = 5) : inner_(seed, max_dim) {}
  std::uint64_t seed() const { return inner_.seed(); }
  int random_object() { return inner_.random_object(); }
  Matrix random_mor() { return inner_.random_mor(); }
  Matrix random_mor_between(const int& a, const int& b) {
    return inner_.random_mor_between(b, a);
  }

 private:
  BaseSampler inner_;
};

// Coisometries of the dual category: isometries, oriented so that the dual
// domain is the number of rows.
class IsomSampler {
 public:
  IsomSampler(std::uint64_t seed, int max_dim = 5);
  std::uint64_t seed() const { return seed_; }
  int random_object();
  Matrix random_mor();                     // p x k isometry, dual p ->' k
  Matrix random_mor_from(const int& x);    // x rows
  Matrix random_mor_onto(const int& y);    // y columns
 private:
  std::uint64_t seed_;
  BaseSampler inner_;
  Rng rng_;
  int max_dim_;
};

}  // namespace dagrel::matcat

namespace dagrel {
template <>
struct CatTraits<matcat::MatCat> {
  static constexpr bool exact = false;
};
}  // namespace dagrel

#endif
