#include "dagrel/matcat/matcat.hpp"

#include <cmath>
#include <sstream>

namespace dagrel::matcat {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const bool tall = m.rows() >= m.cols();
  const Matrix gram = tall ? Matrix(m.transpose() * m) : Matrix(m * m.transpose());
  if (gram.rows() <= 64) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(0.0, top));
  }
  // Power iteration with a deterministic start vector.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(gram.rows());
  v.normalize();
  double lambda = 0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd w = gram * v;
    const double norm = w.norm();
    if (norm == 0) return 0;
    w /= norm;
    const double next = w.dot(gram * w);
    if (std::abs(next - lambda) <= 1e-14 * std::max(1.0, next)) {
      lambda = next;
      break;
    }
    lambda = next;
    v = w;
  }
  return std::sqrt(std::max(0.0, lambda));
}

bool is_contractive(const Matrix& m, const Tolerances& tol) {
  if (!m.allFinite()) throw validation_error("matrix has non-finite entries");
  return operator_norm(m) <= 1.0 + tol.norm_slack;
}

CodilatorParts codilator_parts(const Matrix& r, const Tolerances& tol) {
  if (!is_contractive(r, tol)) {
    throw validation_error("codilator requires a contractive matrix (operator norm " +
                           std::to_string(operator_norm(r)) + ")");
  }
  const int m = static_cast<int>(r.cols());
  const int n = static_cast<int>(r.rows());
  const Matrix p = Matrix::Identity(m, m) - r.transpose() * r;

  CodilatorParts out;
  Matrix e(0, m), mi(m, 0);
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(p);
    const Eigen::VectorXd lam = es.eigenvalues();  // ascending
    const double lam_max = std::max(lam.maxCoeff(), 0.0);
    out.psd_defect = std::min(lam.minCoeff(), 0.0);
    if (out.psd_defect < -100.0 * tol.norm_slack) {
      throw math_error("1 - R^T R indefinite: most negative eigenvalue " +
                       std::to_string(out.psd_defect));
    }
    const double cut = tol.rank_tol * std::max(lam_max, 1.0);
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (lam(i) > cut) keep.push_back(i);
    }
    const int d = static_cast<int>(keep.size());
    e.resize(d, m);
    mi.resize(m, d);
    for (int k = 0; k < d; ++k) {
      const double s = std::sqrt(lam(keep[static_cast<std::size_t>(k)]));
      e.row(k) = s * es.eigenvectors().col(keep[static_cast<std::size_t>(k)]).transpose();
      mi.col(k) = es.eigenvectors().col(keep[static_cast<std::size_t>(k)]) / s;
    }
    out.factor_residual = max_abs(Matrix(e.transpose() * e - p));
  }
  out.rank = static_cast<int>(e.rows());
  out.factor = e;
  out.right_inverse = mi;

  Matrix i1(out.rank + n, m);
  i1.topRows(out.rank) = e;
  i1.bottomRows(n) = r;
  Matrix i2 = Matrix::Zero(out.rank + n, n);
  i2.bottomRows(n) = Matrix::Identity(n, n);
  out.cospan = Cospan<Matrix>{i1, i2};
  return out;
}

Matrix MatCat::compose(const Mor& g, const Mor& f) const {
  if (g.cols() != f.rows()) {
    throw validation_error("Mat compose: dimension mismatch (" + std::to_string(f.rows()) +
                           " vs " + std::to_string(g.cols()) + ")");
  }
  return g * f;
}

bool MatCat::mor_eq(const Mor& f, const Mor& g) const {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  if (f.size() == 0) return true;
  return max_abs(Matrix(f - g)) <= tol_.eq_tol;
}

std::string MatCat::mor_desc(const Mor& f) const {
  std::ostringstream os;
  os << f.cols() << "->" << f.rows() << "[";
  for (int i = 0; i < f.rows(); ++i) {
    if (i) os << ";";
    for (int j = 0; j < f.cols(); ++j) {
      if (j) os << ",";
      os << f(i, j);
    }
  }
  os << "]";
  return os.str();
}

void MatCat::validate(const Mor& f) const {
  if (!f.allFinite()) throw validation_error("matrix has non-finite entries");
  if (!is_contractive(f, tol_)) {
    throw validation_error("matrix is not contractive (operator norm " +
                           std::to_string(operator_norm(f)) + ")");
  }
}

Matrix MatCat::comediate_canonical(const Mor& r, const Cospan<Mor>& codilation) const {
  const CodilatorParts parts = codilator_parts(r, tol_);
  const Mor& a = codilation.left;
  const Mor& b = codilation.right;
  if (a.cols() != r.cols() || b.cols() != r.rows() || a.rows() != b.rows()) {
    throw validation_error("comediate: codilation does not frame r");
  }
  const double tol_pre = tol_.eq_tol;
  if (a.size() > 0 &&
      max_abs(Matrix(a.transpose() * a - Matrix::Identity(a.cols(), a.cols()))) > tol_pre) {
    throw math_error("comediate: violated equation A^T A = 1");
  }
  if (b.size() > 0 &&
      max_abs(Matrix(b.transpose() * b - Matrix::Identity(b.cols(), b.cols()))) > tol_pre) {
    throw math_error("comediate: violated equation B^T B = 1");
  }
  if (r.size() > 0 && max_abs(Matrix(b.transpose() * a - r)) > tol_pre) {
    throw math_error("comediate: violated equation B^T A = R");
  }
  Matrix c(a.rows(), parts.rank + r.rows());
  c.leftCols(parts.rank) = (a - b * r) * parts.right_inverse;
  c.rightCols(r.rows()) = b;
  return c;
}

bool relatively_orthogonal(const Matrix& a, const Matrix& b, const Matrix& u,
                           const Matrix& v, const Tolerances& tol) {
  if (a.rows() != b.rows() || u.cols() != v.cols() || a.cols() != u.rows() ||
      b.cols() != v.rows()) {
    throw validation_error("relatively_orthogonal: dimension mismatch");
  }
  return rel_orth_residual_direct(a, b, u, v) <= tol.eq_tol;
}

double rel_orth_residual_direct(const Matrix& a, const Matrix& b, const Matrix& u,
                                const Matrix& v) {
  return max_abs(Matrix(a.transpose() * b - u * v.transpose()));
}

double rel_orth_residual_complement(const Matrix& a, const Matrix& b, const Matrix& u,
                                    const Matrix& v) {
  const Matrix c = a * u;  // the common part, equal to b * v on valid input
  const Matrix proj = c * c.transpose();
  const Matrix residual =
      a.transpose() * (Matrix::Identity(proj.rows(), proj.cols()) - proj) * b;
  (void)v;
  return max_abs(residual);
}

Cospan<Matrix> coind_pushout(const Matrix& u, const Matrix& v, const Tolerances& tol) {
  if (u.cols() != v.cols()) {
    throw validation_error("coind_pushout: spans share their domain dimension");
  }
  return codilator_parts(Matrix(v * u.transpose()), tol).cospan;
}

bool jointly_epic(const Matrix& f, const Matrix& g, const Tolerances& tol) {
  if (f.rows() != g.rows()) {
    throw validation_error("jointly_epic: target dimensions differ");
  }
  const int p = static_cast<int>(f.rows());
  if (p == 0) return true;
  Matrix both(p, f.cols() + g.cols());
  both.leftCols(f.cols()) = f;
  both.rightCols(g.cols()) = g;
  if (both.cols() == 0) return false;
  Eigen::ColPivHouseholderQR<Matrix> qr(both);
  qr.setThreshold(tol.rank_tol);
  return qr.rank() == p;
}

CoFactorisation<Matrix> cofactorize(const Matrix& f, const Matrix& g, const Tolerances& tol) {
  if (f.rows() != g.rows()) {
    throw validation_error("cofactorize: target dimensions differ");
  }
  const int p = static_cast<int>(f.rows());
  Matrix both(p, f.cols() + g.cols());
  both.leftCols(f.cols()) = f;
  both.rightCols(g.cols()) = g;
  int rank = 0;
  Matrix q(p, 0);
  if (both.size() > 0) {
    Eigen::ColPivHouseholderQR<Matrix> qr(both);
    qr.setThreshold(tol.rank_tol);
    rank = static_cast<int>(qr.rank());
    q = qr.householderQ() * Matrix::Identity(p, rank);
  }
  return CoFactorisation<Matrix>{q, Cospan<Matrix>{Matrix(q.transpose() * f),
                                                   Matrix(q.transpose() * g)}};
}

Matrix l2(const pinj::PartialInjection& r) {
  const int m = r.dom.size();
  const int n = r.cod.size();
  if (!(r.dom == FinSet::segment(m)) || !(r.cod == FinSet::segment(n))) {
    throw validation_error("l2: partial injection must live on the canonical segments [m], [n]");
  }
  Matrix out = Matrix::Zero(n, m);
  for (const auto& [a, b] : r.pairs) out(b, a) = 1.0;
  return out;
}

std::string rel_span_key(const DualCat<MatCat>& cat, const Span<Matrix>& sp) {
  // Debug key only; relation equality for this instance goes through the
  // counit.  Quantise the carried contraction entrywise.
  const Matrix contraction = sp.left.transpose() * sp.right;
  std::ostringstream os;
  os << sp.left.cols() << "/" << sp.right.cols() << ":";
  const double quantum = cat.base().tolerances().eq_tol * 10;
  for (int i = 0; i < contraction.rows(); ++i) {
    for (int j = 0; j < contraction.cols(); ++j) {
      os << std::llround(contraction(i, j) / quantum) << ",";
    }
  }
  return os.str();
}

Matrix from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw validation_error("Matrix JSON: expected {rows, cols, entries}");
  }
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) throw validation_error("Matrix JSON: negative dimensions");
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) {
    throw validation_error("Matrix JSON: row count mismatch");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != cols) {
      throw validation_error("Matrix JSON: column count mismatch in row " + std::to_string(i));
    }
    for (int k = 0; k < cols; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
  }
  if (!m.allFinite()) throw validation_error("Matrix JSON: non-finite entry");
  return m;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    entries.push_back(row);
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::string pretty(const Matrix& m, int precision) {
  std::ostringstream os;
  Eigen::IOFormat fmt(precision, 0, "  ", "\n", "[ ", " ]");
  os << m.format(fmt);
  if (m.size() == 0) os << "[ " << m.rows() << "x" << m.cols() << " empty ]";
  return os.str();
}

BaseSampler::BaseSampler(std::uint64_t seed, int max_dim)
    : seed_(seed), rng_(seed), max_dim_(max_dim) {}

Matrix BaseSampler::gaussian(int rows, int cols) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = rng_.gaussian();
  }
  return g;
}

int BaseSampler::random_object() {
  // Dimension 0 stays reachable but rare.
  return rng_.coin(0.06) ? 0 : rng_.uniform_int(1, max_dim_);
}

Matrix BaseSampler::random_mor() { return random_mor_from(random_object()); }

Matrix BaseSampler::random_mor_from(const int& m) {
  return random_mor_between(m, random_object());
}

Matrix BaseSampler::random_mor_between(const int& m, const int& n) {
  if (m == 0 || n == 0) return Matrix(n, m);
  const int k = std::min(m, n);
  const Matrix u = random_isometry(k, n);
  const Matrix v = random_isometry(k, m);
  Eigen::VectorXd sigma(k);
  for (int i = 0; i < k; ++i) {
    const double roll = rng_.uniform01();
    if (roll < 0.12) {
      sigma(i) = 1.0;  // exactly on the boundary
    } else if (roll < 0.2) {
      sigma(i) = 0.0;  // rank deficiency
    } else {
      sigma(i) = rng_.uniform01();
    }
  }
  return u * sigma.asDiagonal() * v.transpose();
}

Matrix BaseSampler::random_isometry(int from, int to) {
  if (from == 0) return Matrix(to, 0);
  if (from > to) throw validation_error("random_isometry: more columns than rows");
  const Matrix g = gaussian(to, from);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(to, from);
  return q;
}

Matrix BaseSampler::random_unitary(int n) { return random_isometry(n, n); }

IsomSampler::IsomSampler(std::uint64_t seed, int max_dim)
    : seed_(seed), inner_(seed ^ 0x5851f42d4c957f2dULL, max_dim), rng_(seed), max_dim_(max_dim) {}

int IsomSampler::random_object() {
  return rng_.coin(0.06) ? 0 : rng_.uniform_int(1, max_dim_);
}

Matrix IsomSampler::random_mor() {
  const int k = random_object();
  const int p = k + rng_.uniform_int(0, std::max(0, max_dim_ - k));
  return inner_.random_isometry(k, p);
}

Matrix IsomSampler::random_mor_from(const int& x) {
  return inner_.random_isometry(rng_.uniform_int(0, x), x);
}

Matrix IsomSampler::random_mor_onto(const int& y) {
  return inner_.random_isometry(y, y + rng_.uniform_int(0, max_dim_));
}

}  // namespace dagrel::matcat
