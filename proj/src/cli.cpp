#include "circforest/cli.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <vector>

#include "circforest/arithmetic.hpp"
#include "circforest/asymptotics.hpp"
#include "circforest/char_poly.hpp"
#include "circforest/dsl.hpp"
#include "circforest/errors.hpp"
#include "circforest/forest_count.hpp"
#include "circforest/graph.hpp"

namespace circforest {
namespace {

using json = nlohmann::ordered_json;

json bigint(const Int& v) { return to_decimal(v); }

json coeff_array(const IntegerPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_decimal(c));
  return a;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw Error("range must look like a..b, got '" + text + "'");
  long a = 0, b = 0;
  try {
    a = std::stol(text.substr(0, dots));
    b = std::stol(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw Error("range bounds must be integers, got '" + text + "'");
  }
  if (a < 1 || b < a)
    throw Error("range must satisfy 1 <= a <= b, got '" + text + "'");
  return {a, b};
}

// n values the request names, in ascending order
std::vector<long> resolve_ns(const CommandRequest& req, const std::optional<long>& bound_n) {
  if (bound_n) {
    if (req.n || req.range_text)
      throw Error("the family text already binds n = " + std::to_string(*bound_n) +
                  "; drop --n/--range or use a symbolic family");
    return {*bound_n};
  }
  if (req.n && req.range_text) throw Error("--n and --range are mutually exclusive");
  if (req.n) {
    if (*req.n < 1) throw Error("--n must be >= 1");
    return {*req.n};
  }
  if (req.range_text) {
    const auto [a, b] = parse_range(*req.range_text);
    std::vector<long> ns;
    ns.reserve(static_cast<std::size_t>(b - a + 1));
    for (long n = a; n <= b; ++n) ns.push_back(n);
    return ns;
  }
  throw Error("command '" + req.command + "' needs --n or --range (or a family binding n)");
}

// Parallel row sweep with deterministic output order; the first exception wins
// and is rethrown after the loop so a violation can abort the whole document.
template <typename Fn>
std::vector<json> sweep(const std::vector<long>& ns, Fn&& make_row) {
  std::vector<json> rows(ns.size());
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      rows[i] = make_row(ns[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!failed.exchange(true)) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

json count_row(const ForestCountReport& r) {
  json row;
  row["n"] = r.n;
  row["f"] = bigint(r.f_n);
  row["f_base"] = bigint(r.f_base);
  row["method"] = method_tag(r.method);
  row["formal"] = r.formal;
  return row;
}

json skipped_row(long n, const std::string& reason) {
  json row;
  row["n"] = n;
  row["skipped"] = reason;
  return row;
}

std::string render_csv(const json& rows) {
  // column order: keys in first-seen order across all rows
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it) {
      bool known = false;
      for (const auto& c : cols) known = known || c == it.key();
      if (!known) cols.push_back(it.key());
    }
  const auto cell = [](const json& v) -> std::string {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  };
  std::ostringstream os;
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      if (row.contains(cols[c])) os << cell(row.at(cols[c]));
    }
    os << '\n';
  }
  return os.str();
}

std::string render_table(const json& doc) {
  const json& rows = doc.at("rows");
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it) {
      bool known = false;
      for (const auto& c : cols) known = known || c == it.key();
      if (!known) cols.push_back(it.key());
    }
  const auto cell = [](const json& v) -> std::string {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row.at(cols[c])).size());
  std::ostringstream os;
  os << "family: " << doc.at("family").get<std::string>() << "  command: "
     << doc.at("command").get<std::string>() << '\n';
  for (std::size_t c = 0; c < cols.size(); ++c) {
    os << cols[c] << std::string(width[c] - cols[c].size(), ' ');
    os << (c + 1 < cols.size() ? "  " : "");
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = row.contains(cols[c]) ? cell(row.at(cols[c])) : "";
      os << s << std::string(width[c] - s.size(), ' ') << (c + 1 < cols.size() ? "  " : "");
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc.at("rows"));
  if (format == "table") return render_table(doc);
  throw Error("unknown format '" + format + "' (expected json, csv, or table)");
}

}  // namespace

int exit_status_for(const std::exception& error) {
  return dynamic_cast<const StructureViolation*>(&error) != nullptr ? 2 : 1;
}

RunResult run(const CommandRequest& req) {
  RunResult res;
  std::ostringstream diag;
  try {
    const FamilyDescriptor desc = parse_family(req.family_text);
    const FoliationSpec spec = build_family(desc, req.allow_disconnected);
    if (req.allow_disconnected && !spec.base().connected())
      diag << "warning: base graph is disconnected; the count identities assume a connected base\n";

    json doc;
    doc["family"] = format_family(desc);
    doc["command"] = req.command;

    if (req.command == "expand") {
      std::vector<long> ns = resolve_ns(req, desc.bound_n);
      if (ns.size() != 1) throw Error("expand takes a single --n");
      const ExpandedGraph g = expand(spec, ns[0]);
      if (req.expand_format == "edge-list")
        res.output = to_edge_list(g);
      else if (req.expand_format == "graph-text")
        res.output = to_graph_text(g);
      else
        throw Error("unknown expand format '" + req.expand_format +
                    "' (expected edge-list or graph-text)");
      res.diagnostics = diag.str();
      return res;
    }

    if (req.command == "poly") {
      const CharPolyBundle b = char_poly(spec);
      json row;
      row["s"] = b.shift;
      row["eta"] = bigint(b.eta);
      row["m_prime"] = b.m_prime;
      row["q"] = coeff_array(b.q);
      row["f_z"] = coeff_array(b.f_z);
      row["q1"] = bigint(b.q.eval(Int(1)));
      row["qm1"] = bigint(b.q.eval(Int(-1)));
      doc["rows"] = json::array({row});
    } else if (req.command == "count" || req.command == "verify") {
      const std::vector<long> ns = resolve_ns(req, desc.bound_n);
      for (long n : ns)
        if (n > 2000)
          diag << "warning: n = " << n << " builds a resultant matrix of order n + 2s; "
               << "expect a long runtime\n";
      const CharPolyBundle b = char_poly(spec);
      const bool verify = req.command == "verify";
      doc["rows"] = sweep(ns, [&](long n) -> json {
        if (verify) {
          const ArithmeticReport r = verify_arithmetic_structure(spec, b, n);
          json row;
          row["n"] = r.n;
          row["f"] = bigint(r.f_n);
          row["f_base"] = bigint(r.f_base);
          row["q_minus_one"] = bigint(r.q_minus_one);
          row["p"] = bigint(r.square_free_p);
          row["a"] = bigint(r.a_n);
          row["parity"] = r.even ? "even" : "odd";
          row["verified"] = r.verified;
          return row;
        }
        return count_row(forest_count(spec, b, n));
      });
    } else if (req.command == "oracle") {
      const std::vector<long> ns = resolve_ns(req, desc.bound_n);
      const long min_n = 2L * spec.max_jump() + 1;
      if (ns.size() == 1 && ns[0] < min_n)
        throw JumpTooLargeForN("oracle needs n > " + std::to_string(min_n - 1) +
                               " for this family");
      std::vector<long> valid;
      for (long n : ns)
        if (n >= min_n) valid.push_back(n);
      std::vector<json> rows =
          sweep(valid, [&](long n) -> json { return count_row(forest_count_oracle(spec, n)); });
      json all = json::array();
      std::size_t next_valid = 0;
      for (long n : ns) {
        if (n >= min_n)
          all.push_back(rows[next_valid++]);
        else
          all.push_back(skipped_row(n, "n <= 2*max_jump: no graph with these jumps exists"));
      }
      doc["rows"] = all;
    } else if (req.command == "mahler") {
      const CharPolyBundle b = char_poly(spec);
      const MahlerReport r = mahler_report(b, req.precision_digits);
      json row;
      row["a_roots"] = r.a_roots;
      row["a_quadrature"] = r.a_quadrature;
      row["discrepancy"] = r.discrepancy;
      row["error_estimate"] = r.error_estimate;
      row["eta"] = bigint(b.eta);
      json roots = json::array();
      for (std::size_t i = 0; i < r.roots_used.roots.size(); ++i) {
        json root;
        root["re"] = r.roots_used.roots[i].real();
        root["im"] = r.roots_used.roots[i].imag();
        root["certified_error"] = r.roots_used.certified_error[i];
        roots.push_back(root);
      }
      row["roots"] = roots;
      doc["rows"] = json::array({row});
    } else if (req.command == "converge") {
      if (req.n_max < 3) throw Error("converge needs --n-max >= 3");
      const auto table = convergence_report(spec, req.n_max, req.precision_digits);
      json rows = json::array();
      for (const auto& r : table) {
        json row;
        row["n"] = r.n;
        row["nth_root"] = r.nth_root;
        row["ratio"] = r.ratio;
        rows.push_back(row);
      }
      doc["rows"] = rows;
    } else {
      throw Error("unknown command '" + req.command + "'");
    }

    res.output = render(doc, req.format);
    res.diagnostics = diag.str();
    return res;
  } catch (const SyntaxError& e) {
    std::ostringstream os;
    os << diag.str() << "syntax error at offset " << e.position << ": " << e.what()
       << " (expected";
    for (std::size_t i = 0; i < e.expected.size(); ++i)
      os << (i ? ", " : " ") << e.expected[i];
    os << ")\n";
    res.status = 1;
    res.diagnostics = os.str();
  } catch (const SemanticError& e) {
    res.status = 1;
    res.diagnostics = diag.str() + "invalid descriptor at offset " + std::to_string(e.position) +
                      ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    res.status = exit_status_for(e);
    res.diagnostics = diag.str() +
                      (res.status == 2 ? "FALSIFIED COUNT IDENTITY: " : "error: ") + e.what() +
                      "\n";
  }
  res.output.clear();
  return res;
}

}  // namespace circforest
