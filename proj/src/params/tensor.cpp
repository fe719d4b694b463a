#include "asch/params/tensor.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "asch/error.hpp"

namespace asch {

long ParameterArray::order() const { return std::accumulate(valencies.begin(), valencies.end(), 1L); }

std::string ParameterArray::to_string() const {
  std::ostringstream os;
  os << "[[";
  for (std::size_t i = 0; i < valencies.size(); ++i) os << (i ? ", " : "") << valencies[i];
  os << "], [";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << "; ";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? ", " : "") << blocks[b][i];
  }
  os << "]]";
  return os.str();
}

namespace {

class ArrayParser {
 public:
  explicit ArrayParser(const std::string& s) : s_(s) {}

  ParameterArray run() {
    ParameterArray a;
    expect('[');
    expect('[');
    a.valencies.push_back(number());
    while (peek() == ',') {
      ++pos_;
      a.valencies.push_back(number());
    }
    expect(']');
    expect(',');
    expect('[');
    if (peek() != ']') {
      a.blocks.emplace_back();
      a.blocks.back().push_back(number());
      while (peek() == ',' || peek() == ';') {
        if (s_[pos_++] == ';') a.blocks.emplace_back();
        a.blocks.back().push_back(number());
      }
    }
    expect(']');
    expect(']');
    if (peek() != '\0') error("trailing characters");
    const int d = a.d();
    if (static_cast<int>(a.blocks.size()) != d - 1)
      fail(ErrorKind::parse, "arity: expected " + std::to_string(d - 1) + " blocks for d = " + std::to_string(d) +
                                 ", found " + std::to_string(a.blocks.size()));
    for (int j = 1; j < d; ++j)
      if (static_cast<int>(a.blocks[j - 1].size()) != d - j)
        fail(ErrorKind::parse, "arity: block " + std::to_string(j) + " must have " + std::to_string(d - j) + " entries");
    return a;
  }

 private:
  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  long number() {
    peek();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) error("expected an integer");
    try {
      return std::stol(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      error("integer out of range");
    }
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::parse, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string idx(const char* name, int h, int i, int j) {
  return std::string(name) + "^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j);
}

}  // namespace

ParameterArray ParameterArray::parse(const std::string& text) { return ArrayParser(text).run(); }

long IntersectionTensor::n() const {
  long n = 0;
  for (int i = 0; i <= d_; ++i) n += k(i);
  return n;
}

std::vector<long> IntersectionTensor::valencies() const {
  std::vector<long> v;
  for (int i = 0; i <= d_; ++i) v.push_back(k(i));
  return v;
}

Matrix<Rational> IntersectionTensor::intersection_matrix(int i) const {
  auto m = zero_matrix<Rational>(d_ + 1, d_ + 1);
  for (int h = 0; h <= d_; ++h)
    for (int j = 0; j <= d_; ++j) m[h][j] = p(h, i, j);
  return m;
}

ParameterArray IntersectionTensor::to_parameter_array() const {
  ParameterArray a;
  for (int i = 1; i <= d_; ++i) a.valencies.push_back(k(i));
  for (int j = 1; j < d_; ++j) {
    a.blocks.emplace_back();
    for (int h = j + 1; h <= d_; ++h) a.blocks.back().push_back(p(h, 1, j));
  }
  return a;
}

IntersectionTensor IntersectionTensor::relabeled(const std::vector<int>& perm) const {
  require(static_cast<int>(perm.size()) == d_ + 1 && perm[0] == 0, ErrorKind::usage, "invalid relation relabeling");
  IntersectionTensor t(d_);
  for (int h = 0; h <= d_; ++h)
    for (int i = 0; i <= d_; ++i)
      for (int j = 0; j <= d_; ++j) t.p(perm[h], perm[i], perm[j]) = p(h, i, j);
  return t;
}

std::vector<std::string> validate_intersection_tensor(const IntersectionTensor& t) {
  std::vector<std::string> out;
  const int d = t.d();
  for (int i = 0; i <= d; ++i)
    if (t.k(i) < 1) out.push_back("k_" + std::to_string(i) + " < 1");
  if (t.k(0) != 1) out.push_back("k_0 != 1");
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const long v = t.p(h, i, j);
        if (v < 0) out.push_back(idx("p", h, i, j) + " < 0");
        if (h == 0 && i != j && v != 0) out.push_back(idx("p", h, i, j) + " != 0");
        if (i == 0 && v != (h == j ? 1 : 0)) out.push_back(idx("p", h, i, j) + " != delta");
        if (j == 0 && v != (h == i ? 1 : 0)) out.push_back(idx("p", h, i, j) + " != delta");
        if (i < j && v != t.p(h, j, i)) out.push_back(idx("p", h, i, j) + " != " + idx("p", h, j, i));
        if (t.k(h) * v != t.k(i) * t.p(i, h, j))
          out.push_back("k_" + std::to_string(h) + " " + idx("p", h, i, j) + " != k_" + std::to_string(i) + " " +
                        idx("p", i, h, j));
      }
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i) {
      long s = 0;
      for (int j = 0; j <= d; ++j) s += t.p(h, i, j);
      if (s != t.k(i))
        out.push_back("sum_j p^" + std::to_string(h) + "_" + std::to_string(i) + "j != k_" + std::to_string(i));
    }
  return out;
}

std::optional<Matrix<Rational>> generator_coefficients(const IntersectionTensor& t, const std::vector<Rational>& weights) {
  const int d = t.d();
  auto B = zero_matrix<Rational>(d + 1, d + 1);
  for (int i = 0; i <= d && i < static_cast<int>(weights.size()); ++i) {
    if (sgn(weights[i]) == 0) continue;
    auto Bi = t.intersection_matrix(i);
    for (int h = 0; h <= d; ++h)
      for (int j = 0; j <= d; ++j) B[h][j] += weights[i] * Bi[h][j];
  }
  // Krylov vectors B^k e_0 as columns.
  auto V = zero_matrix<Rational>(d + 1, d + 1);
  std::vector<Rational> v(d + 1, Rational(0));
  v[0] = 1;
  for (int k = 0; k <= d; ++k) {
    for (int h = 0; h <= d; ++h) V[h][k] = v[h];
    v = multiply(B, v);
  }
  auto inv = solve(V, identity_matrix<Rational>(d + 1));
  if (!inv) return std::nullopt;
  return transpose(*inv);
}

bool check_quotient_polynomial(const IntersectionTensor& t, const std::vector<int>& fused) {
  require(!fused.empty(), ErrorKind::usage, "empty fused relation set");
  std::vector<Rational> w(t.d() + 1, Rational(0));
  for (int i : fused) {
    require(i >= 1 && i <= t.d(), ErrorKind::usage, "fused relation index out of range");
    w[i] = 1;
  }
  return generator_coefficients(t, w).has_value();
}

IntersectionTensor recover_from_parameter_array(const ParameterArray& a) {
  const int d = a.d();
  require(d >= 1, ErrorKind::parse, "parameter array without valencies");
  require(static_cast<int>(a.blocks.size()) == d - 1, ErrorKind::parse, "parameter array block count does not match d");
  for (int j = 1; j < d; ++j)
    require(static_cast<int>(a.blocks[j - 1].size()) == d - j, ErrorKind::parse, "parameter array block length mismatch");
  std::vector<Rational> k(d + 1);
  k[0] = 1;
  for (int i = 1; i <= d; ++i) {
    require(a.valencies[i - 1] >= 1, ErrorKind::infeasible, "nonpositive valency");
    k[i] = a.valencies[i - 1];
  }
  auto B1 = zero_matrix<Rational>(d + 1, d + 1);
  B1[0][1] = k[1];
  B1[1][0] = 1;
  for (int j = 1; j <= d; ++j)
    for (int h = j + 1; h <= d; ++h) {
      const long v = a.blocks[j - 1][h - j - 1];
      require(v >= 0, ErrorKind::infeasible, "negative entry in parameter array");
      B1[h][j] = v;
      B1[j][h] = k[h] * Rational(v) / k[j];
    }
  for (int h = 1; h <= d; ++h) {
    Rational s = 0;
    for (int j = 0; j <= d; ++j)
      if (j != h) s += B1[h][j];
    B1[h][h] = k[1] - s;
  }
  for (const auto& row : B1)
    for (const auto& v : row)
      require(is_integral(v) && sgn(v) >= 0, ErrorKind::infeasible, "p^h_1j not a nonnegative integer");

  IntersectionTensor t(d);
  for (int h = 0; h <= d; ++h)
    for (int j = 0; j <= d; ++j) t.p(h, 1, j) = B1[h][j].get_num().get_si();
  std::vector<Rational> w(d + 1, Rational(0));
  w[1] = 1;
  auto coeff = generator_coefficients(t, w);
  if (!coeff) fail(ErrorKind::not_qpg, "B_1 lacks d+1 distinct eigenvalues for " + a.to_string());

  std::vector<Matrix<Rational>> powers{identity_matrix<Rational>(d + 1)};
  for (int e = 1; e <= d; ++e) powers.push_back(multiply(powers.back(), B1));
  for (int i = 0; i <= d; ++i) {
    auto Mi = zero_matrix<Rational>(d + 1, d + 1);
    for (int e = 0; e <= d; ++e) {
      const Rational& c = (*coeff)[i][e];
      if (sgn(c) == 0) continue;
      for (int h = 0; h <= d; ++h)
        for (int j = 0; j <= d; ++j) Mi[h][j] += c * powers[e][h][j];
    }
    for (int h = 0; h <= d; ++h)
      for (int j = 0; j <= d; ++j) {
        const Rational& v = Mi[h][j];
        if (!is_integral(v) || sgn(v) < 0)
          fail(ErrorKind::infeasible, "recovered p^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j) +
                                          " = " + v.get_str() + " is not a nonnegative integer");
        t.p(h, i, j) = v.get_num().get_si();
      }
  }
  auto problems = validate_intersection_tensor(t);
  if (!problems.empty()) fail(ErrorKind::infeasible, "recovered tensor violates " + problems.front());
  return t;
}

}  // namespace asch
