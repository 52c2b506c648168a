#include "sigmalucas/report_format.hpp"

namespace sigmalucas::cli {

namespace {

Json strings(std::span<const Int> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json pattern_json(const solver::TheoremPattern& t) {
  return Json{{"theorem", std::string(solver::name(t.id))}, {"P", t.P}, {"m", t.m}};
}

std::string join_indices(const std::vector<long>& indices) {
  std::string text;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(indices[i]);
  }
  return text;
}

}  // namespace

Json to_json(const solver::SolutionReport& r) {
  Json report;
  report["equation"] = {{"A", to_string(r.instance.A)},
                        {"B", to_string(r.instance.B)},
                        {"sporadic_bound", to_string(r.instance.sporadic_bound())}};
  report["limits"] = {{"brute_cap", r.config.brute_cap},
                      {"q_limit", r.config.q_limit},
                      {"P_limit", r.config.P_limit},
                      {"m_limit", r.config.m_limit},
                      {"k_limit", r.config.k_limit}};
  report["sporadic"] = {{"solutions", strings(r.sporadic)},
                        {"scanned_to", to_string(r.sporadic_scanned_to)},
                        {"complete", r.sporadic_complete}};

  Json semi = Json::array();
  for (const auto& pq : r.semiprime) {
    semi.push_back({{"p", to_string(pq.p)}, {"q", to_string(pq.q)}, {"n", to_string(pq.product())}});
  }
  report["semiprime"] = std::move(semi);

  Json patterns = Json::array();
  for (const auto& t : r.patterns) patterns.push_back(pattern_json(t));
  report["patterns"] = std::move(patterns);

  Json families = Json::array();
  std::vector<Int> values;
  for (const auto& s : r.families) {
    Json entry{{"n", to_string(s.n)}, {"p", to_string(s.p)}, {"q", to_string(s.q)}};
    entry["pattern"] = pattern_json(s.pattern);
    entry["indices"] = s.indices;
    entry["primality"] = s.probable ? "probable_prime" : "prime";
    families.push_back(std::move(entry));
    if (values.empty() || values.back() != s.n) values.push_back(s.n);
  }
  report["families"] = std::move(families);
  report["family_values"] = strings(values);
  report["diagnostics"] = r.diagnostics;
  return report;
}

void write_tsv(std::ostream& out, const solver::SolutionReport& r) {
  out << "equation\t" << r.instance.A << '\t' << r.instance.B << '\t' << r.instance.sporadic_bound() << '\n';
  out << "limits\t" << r.config.brute_cap << '\t' << r.config.q_limit << '\t' << r.config.P_limit << '\t'
      << r.config.m_limit << '\t' << r.config.k_limit << '\n';
  out << "sporadic_scan\t" << r.sporadic_scanned_to << '\t' << (r.sporadic_complete ? "complete" : "partial")
      << '\n';
  for (const auto& n : r.sporadic) out << "sporadic\t" << n << '\n';
  for (const auto& pq : r.semiprime) out << "semiprime\t" << pq.p << '\t' << pq.q << '\t' << pq.product() << '\n';
  for (const auto& t : r.patterns) out << "pattern\t" << solver::name(t.id) << '\t' << t.P << '\t' << t.m << '\n';
  for (const auto& s : r.families) {
    out << "family\t" << s.n << '\t' << s.p << '\t' << s.q << '\t' << solver::name(s.pattern.id) << '\t'
        << s.pattern.P << '\t' << s.pattern.m << '\t' << join_indices(s.indices) << '\t'
        << (s.probable ? "probable_prime" : "prime") << '\n';
  }
  for (const auto& d : r.diagnostics) out << "diagnostic\t" << d << '\n';
}

std::string_view form_name(pell::PellForm form) {
  switch (form) {
    case pell::PellForm::plus4: return "PLUS4";
    case pell::PellForm::minus4: return "MINUS4";
    case pell::PellForm::unsupported: return "UNSUPPORTED";
  }
  return "?";
}

Json to_json(const pell::PellShape& shape, int rhs, std::span<const pell::PellSolution> solutions) {
  Json out{{"D", to_string(shape.D)}, {"shape", std::string(form_name(shape.form))}, {"P", shape.P}, {"rhs", rhs}};
  Json list = Json::array();
  for (const auto& s : solutions) list.push_back({{"k", s.k}, {"x", to_string(s.x)}, {"y", to_string(s.y)}});
  out["solutions"] = std::move(list);
  return out;
}

void write_tsv(std::ostream& out, std::span<const pell::PellSolution> solutions) {
  for (const auto& s : solutions) out << s.x << '\t' << s.y << '\t' << s.k << '\n';
}

Json to_json(std::span<const sigma3::Sigma3Hit> hits, std::uint64_t bound, bool restrict_q) {
  Json out{{"mode", "theorem"}, {"bound", bound}, {"restrict_q", restrict_q}};
  Json list = Json::array();
  Json counterexamples = Json::array();
  for (const auto& h : hits) {
    list.push_back({{"n", std::to_string(h.n)},
                    {"p", std::to_string(h.p)},
                    {"q", std::to_string(h.q)},
                    {"alpha", h.alpha},
                    {"even_perfect", h.even_perfect}});
    if (!h.even_perfect) counterexamples.push_back(std::to_string(h.n));
  }
  out["hits"] = std::move(list);
  out["counterexamples"] = std::move(counterexamples);
  return out;
}

Json to_json(std::span<const sigma3::ConjectureHit> hits, std::uint64_t bound) {
  Json out{{"mode", "conjecture"}, {"bound", bound}};
  Json list = Json::array();
  Json counterexamples = Json::array();
  for (const auto& h : hits) {
    list.push_back({{"n", std::to_string(h.n)}, {"even_perfect", h.even_perfect}});
    if (!h.even_perfect) counterexamples.push_back(std::to_string(h.n));
  }
  out["hits"] = std::move(list);
  out["counterexamples"] = std::move(counterexamples);
  return out;
}

}  // namespace sigmalucas::cli
