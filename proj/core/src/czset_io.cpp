#include "czdc/czset_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace czdc {

namespace {

void write_value(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void write_row(std::ostream& out, const Eigen::VectorXd& row) {
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (j > 0) out << ' ';
    write_value(out, row(j));
  }
  out << '\n';
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) write_row(out, m.row(i));
}

double read_value(std::istream& in, const char* what) {
  double v = 0.0;
  if (!(in >> v))
    throw std::runtime_error(std::string("cz parse: bad value in ") + what);
  return v;
}

Eigen::MatrixXd read_matrix(std::istream& in, Eigen::Index rows,
                            Eigen::Index cols, const char* what) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = read_value(in, what);
  return m;
}

}  // namespace

void write_cz(std::ostream& out, const ConstrainedZonotope& x) {
  out << "cz n=" << x.dim() << " ng=" << x.num_generators()
      << " nh=" << x.num_constraints() << '\n';
  write_matrix(out, x.G);
  write_row(out, x.c);
  write_matrix(out, x.A);
  write_row(out, x.b);
}

std::string to_cz_string(const ConstrainedZonotope& x) {
  std::ostringstream oss;
  write_cz(oss, x);
  return oss.str();
}

ConstrainedZonotope read_cz(std::istream& in) {
  std::string tag;
  if (!(in >> tag)) throw std::runtime_error("cz parse: missing header");
  if (tag != "cz") throw std::runtime_error("cz parse: bad magic '" + tag + "'");

  long long n = -1, ng = -1, nh = -1;
  for (int field = 0; field < 3; ++field) {
    std::string kv;
    if (!(in >> kv)) throw std::runtime_error("cz parse: truncated header");
    long long value = 0;
    if (std::sscanf(kv.c_str(), "n=%lld", &value) == 1)
      n = value;
    else if (std::sscanf(kv.c_str(), "ng=%lld", &value) == 1)
      ng = value;
    else if (std::sscanf(kv.c_str(), "nh=%lld", &value) == 1)
      nh = value;
    else
      throw std::runtime_error("cz parse: unknown header field '" + kv + "'");
  }
  if (n < 0 || ng < 0 || nh < 0)
    throw std::runtime_error("cz parse: incomplete header");

  const Eigen::MatrixXd g = read_matrix(in, n, ng, "G");
  const Eigen::VectorXd c = read_matrix(in, 1, n, "c").transpose();
  const Eigen::MatrixXd a = read_matrix(in, nh, ng, "A");
  const Eigen::VectorXd b = read_matrix(in, 1, nh, "b").transpose();
  return ConstrainedZonotope(g, c, a, b);
}

ConstrainedZonotope from_cz_string(const std::string& text) {
  std::istringstream iss(text);
  return read_cz(iss);
}

}  // namespace czdc
