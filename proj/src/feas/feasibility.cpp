#include "asch/feas/feasibility.hpp"

#include <cmath>
#include <sstream>

#include "asch/error.hpp"

namespace asch {

const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::handshake: return "handshake";
    case CheckId::multiplicities: return "multiplicities";
    case CheckId::krein: return "krein";
    case CheckId::absolute_bound: return "absolute_bound";
    case CheckId::quotient_integrality: return "quotient_integrality";
    case CheckId::conference: return "conference";
    case CheckId::triple_intersection: return "triple_intersection";
    case CheckId::forbidden_quadruple: return "forbidden_quadruple";
  }
  return "unknown";
}

CheckId parse_check_id(const std::string& s) {
  for (CheckId id : {CheckId::handshake, CheckId::multiplicities, CheckId::krein, CheckId::absolute_bound,
                     CheckId::quotient_integrality, CheckId::conference, CheckId::triple_intersection,
                     CheckId::forbidden_quadruple})
    if (s == to_string(id)) return id;
  fail(ErrorKind::usage, "unknown check id: " + s);
}

const std::vector<CheckId>& implemented_checks() {
  static const std::vector<CheckId> ids{CheckId::handshake,      CheckId::multiplicities,
                                        CheckId::krein,          CheckId::absolute_bound,
                                        CheckId::quotient_integrality, CheckId::conference};
  return ids;
}

SchemeData analyse(const IntersectionTensor& t) {
  SchemeData s{t, compute_eigendata(t), {}, {}};
  s.krein = compute_krein(s.eigen);
  s.structures = find_imprimitivity_sets(t, &s.eigen, &s.krein);
  return s;
}

namespace {

std::string sub(int h, int i, int j) { return std::to_string(h) + "_" + std::to_string(i) + std::to_string(j); }

bool is_sum_of_two_squares(long v) {
  for (long a = 0; a * a <= v; ++a) {
    long r = v - a * a;
    long b = static_cast<long>(std::sqrt(static_cast<double>(r)));
    while (b * b > r) --b;
    while ((b + 1) * (b + 1) <= r) ++b;
    if (b * b == r) return true;
  }
  return false;
}

CheckResult handshake(const SchemeData& s) {
  CheckResult r;
  const auto& t = s.tensor;
  const int d = t.d();
  for (int i = 1; i <= d; ++i) {
    if ((t.n() * t.k(i)) % 2 != 0)
      r.reasons.push_back({"handshake", "n k_" + std::to_string(i), "handshake"});
    for (int j = 1; j <= d; ++j)
      if ((t.k(i) * t.p(i, i, j)) % 2 != 0)
        r.reasons.push_back({"handshake", "k_" + std::to_string(i) + " p^" + sub(i, i, j), "handshake"});
  }
  return r;
}

CheckResult multiplicities(const SchemeData& s) {
  CheckResult r;
  for (int j = 0; j <= s.eigen.d; ++j) {
    const auto& m = s.eigen.m[j];
    if (!m.is_rational() || !is_integral(m.to_rational()) || m.sign() <= 0)
      r.reasons.push_back({"multiplicities", "m_" + std::to_string(j), "multiplicities"});
  }
  return r;
}

CheckResult krein(const SchemeData& s) {
  CheckResult r;
  const int d = s.eigen.d;
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = i; j <= d; ++j)
        if (s.krein.q(h, i, j).sign() < 0)
          r.reasons.push_back({"krein", "q^" + sub(h, i, j), "q^" + sub(h, i, j) + " < 0"});
  return r;
}

CheckResult absolute_bound(const SchemeData& s) {
  CheckResult r;
  const auto& e = s.eigen;
  for (int i = 1; i <= e.d; ++i)
    for (int j = i; j <= e.d; ++j) {
      AlgebraicReal sum;
      for (int h = 0; h <= e.d; ++h)
        if (!s.krein.q(h, i, j).is_zero()) sum += e.m[h];
      AlgebraicReal bound = i == j ? e.m[i] * (e.m[i] + AlgebraicReal(1)) / AlgebraicReal(2) : e.m[i] * e.m[j];
      if (sum > bound)
        r.reasons.push_back({"absolute_bound", "i=" + std::to_string(i) + " j=" + std::to_string(j), "absolute bound"});
    }
  return r;
}

CheckResult quotient_integrality(const SchemeData& s) {
  CheckResult r;
  for (const auto& st : s.structures) {
    if (!st.nontrivial) continue;
    auto qp = quotient_parameters_exact(s.tensor, st);
    for (const auto& entry : qp.non_integral()) {
      std::string where = entry + " in A/" + st.label();
      r.reasons.push_back({"quotient_integrality", where, entry + " not integral in A/" + st.label()});
    }
  }
  return r;
}

CheckResult conference(const SchemeData& s) {
  CheckResult r;
  for (const auto& st : s.structures) {
    if (!st.nontrivial || st.relation_classes.size() != 3) continue;
    auto qp = quotient_parameters_exact(s.tensor, st);
    if (!qp.integral() || !is_integral(st.n_tilde)) continue;
    const long v = st.n_tilde.get_num().get_si();
    if (v % 4 != 1) continue;
    bool conf = false;
    for (int a : {1, 2}) {
      const int b = 3 - a;
      conf = conf || (qp.k[a] == make_rational(v - 1, 2) && qp.p_at(a, a, a) == make_rational(v - 5, 4) &&
                      qp.p_at(b, a, a) == make_rational(v - 1, 4));
    }
    if (conf && !is_sum_of_two_squares(v))
      r.reasons.push_back({"conference", "A/" + st.label(), "conference for A/" + st.label()});
  }
  return r;
}

}  // namespace

CheckResult run_check(const SchemeData& s, CheckId id) {
  CheckResult r;
  switch (id) {
    case CheckId::handshake: r = handshake(s); break;
    case CheckId::multiplicities: r = multiplicities(s); break;
    case CheckId::krein: r = krein(s); break;
    case CheckId::absolute_bound: r = absolute_bound(s); break;
    case CheckId::quotient_integrality: r = quotient_integrality(s); break;
    case CheckId::conference: r = conference(s); break;
    case CheckId::triple_intersection:
    case CheckId::forbidden_quadruple:
      r.status = CheckStatus::not_implemented;
      return r;
  }
  r.status = r.reasons.empty() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

FeasibilityReport run_all(const ParameterArray& a) {
  FeasibilityReport rep;
  rep.array = a;
  rep.not_implemented = {to_string(CheckId::triple_intersection), to_string(CheckId::forbidden_quadruple)};
  std::optional<SchemeData> s;
  try {
    s = analyse(recover_from_parameter_array(a));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invariant) throw;
    rep.infeasible = true;
    rep.reasons.push_back({"recovery", e.what(), "parameter recovery failed"});
    return rep;
  }
  for (CheckId id : implemented_checks()) {
    auto r = run_check(*s, id);
    rep.reasons.insert(rep.reasons.end(), r.reasons.begin(), r.reasons.end());
  }
  rep.infeasible = !rep.reasons.empty();
  return rep;
}

std::string FeasibilityReport::machine_line() const {
  std::ostringstream os;
  os << array.order() << '\t' << array.to_string() << '\t' << verdict() << '\t';
  std::string last;
  bool first = true;
  for (const auto& r : reasons) {
    if (r.text == last) continue;  // collapse repeats such as several handshake witnesses
    os << (first ? "" : ";") << r.text;
    first = false;
    last = r.text;
  }
  return os.str();
}

std::string FeasibilityReport::text() const {
  std::ostringstream os;
  os << "array " << array.to_string() << " (n = " << array.order() << ")\n";
  os << "verdict " << verdict() << "\n";
  for (const auto& r : reasons) os << "  " << r.check << ": " << r.text << " [" << r.detail << "]\n";
  for (const auto& c : not_implemented) os << "  " << c << ": not-implemented\n";
  return os.str();
}

}  // namespace asch
