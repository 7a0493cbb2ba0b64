#include "crosscap/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace crosscap {

namespace {

Error schema_error(const std::string& what) { return Error(Errc::InvalidArgument, "bad table input: " + what); }

std::string optional_text(const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); }

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Int require_decimal(std::string_view cell) {
  const auto v = parse_decimal(cell);
  if (!v) throw schema_error("'" + std::string(cell) + "' is not a decimal integer");
  return *v;
}

Json knot_pair(const TorusKnot& k) { return Json::array({k.p(), k.q()}); }

TorusKnot knot_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw schema_error("knot pair must be [p, q]");
  const Int p = j[0].get<Int>();
  const Int q = j[1].get<Int>();
  const TorusKnot k = normalize(p, q);
  if (k.p() != p || k.q() != q) throw schema_error("knot pair is not normalized");
  return k;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "human") return OutputFormat::Human;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::optional<Int> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<TableFilter> parse_filter(std::string_view text) {
  if (text == "all") return TableFilter::All;
  if (text == "even") return TableFilter::Even;
  if (text == "odd") return TableFilter::Odd;
  if (text == "batson") return TableFilter::Batson;
  if (text == "family-km1") return TableFilter::FamilyKm1;
  return std::nullopt;
}

bool passes_filter(const TorusKnot& knot, TableFilter filter) {
  const Int p = knot.p();
  const Int q = knot.q();
  switch (filter) {
    case TableFilter::All: return true;
    case TableFilter::Even: return is_even(p);
    case TableFilter::Odd: return !is_even(p) && !is_even(q);
    case TableFilter::Batson: return is_even(p) && p >= 4 && q == p - 1;
    case TableFilter::FamilyKm1:
      // T(km + 1, m) with m, k odd, m > 1, k >= 1.
      return !is_even(q) && q > 1 && (p - 1) % q == 0 && !is_even((p - 1) / q);
  }
  return false;
}

std::vector<GenusReport> build_table(Int pmax, Int qmax, TableFilter filter) {
  if (pmax < 2 || qmax < 2) throw Error(Errc::InvalidArgument, "table bounds must be at least 2");
  std::vector<GenusReport> out;
  for (Int p = 2; p <= pmax; ++p) {
    for (Int q = 2; q <= qmax; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const TorusKnot knot = normalize(p, q);
      if (knot.p() != p || !passes_filter(knot, filter)) continue;
      out.push_back(make_report(knot));
    }
  }
  return out;
}

Json report_to_json(const GenusReport& r) {
  Json trace = Json::array();
  for (const PinchRecord& rec : r.trace) {
    trace.push_back(Json{{"from", knot_pair(rec.source)},
                         {"to", knot_pair(rec.result)},
                         {"t", rec.witness.t},
                         {"h", rec.witness.h},
                         {"sign", std::string(to_string(rec.sign))}});
  }
  Json exact = r.gamma4.exact ? Json(*r.gamma4.exact) : Json(nullptr);
  return Json{{"knot", Json{{"p", r.knot.p()}, {"q", r.knot.q()}}},
              {"k", r.k},
              {"a", r.a},
              {"ell", r.ell},
              {"beta1_F", r.beta1_F},
              {"gamma3", r.gamma3},
              {"gamma4", Json{{"lower", r.gamma4.lower},
                              {"upper", r.gamma4.upper},
                              {"exact", exact},
                              {"provenance", std::string(to_string(r.gamma4.provenance))}}},
              {"gap_lower_bound", Json{{"num", r.gap_lower_bound.num()}, {"den", r.gap_lower_bound.den()}}},
              {"orientable_genus", r.orientable_genus},
              {"trace", trace}};
}

GenusReport report_from_json(const Json& j) {
  try {
    const Json& knot = j.at("knot");
    GenusReport r(knot_from_pair(Json::array({knot.at("p"), knot.at("q")})));
    r.k = j.at("k").get<Int>();
    r.a = j.at("a").get<Int>();
    r.ell = j.at("ell").get<Int>();
    r.beta1_F = j.at("beta1_F").get<Int>();
    r.gamma3 = j.at("gamma3").get<Int>();
    const Json& g4 = j.at("gamma4");
    r.gamma4.lower = g4.at("lower").get<Int>();
    r.gamma4.upper = g4.at("upper").get<Int>();
    if (!g4.at("exact").is_null()) r.gamma4.exact = g4.at("exact").get<Int>();
    const auto provenance = parse_provenance(g4.at("provenance").get<std::string>());
    if (!provenance) throw schema_error("unknown gamma4 provenance");
    r.gamma4.provenance = *provenance;
    const Json& gap = j.at("gap_lower_bound");
    r.gap_lower_bound = Fraction(gap.at("num").get<Int>(), gap.at("den").get<Int>());
    r.orientable_genus = j.at("orientable_genus").get<Int>();
    for (const Json& rec : j.at("trace")) {
      const std::string sign = rec.at("sign").get<std::string>();
      if (sign != "positive" && sign != "negative") throw schema_error("unknown pinch sign");
      r.trace.push_back(PinchRecord{knot_from_pair(rec.at("from")), knot_from_pair(rec.at("to")),
                                    PinchWitness{rec.at("t").get<Int>(), rec.at("h").get<Int>()},
                                    sign == "positive" ? PinchSign::Positive : PinchSign::Negative});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(e.what());
  }
}

std::vector<GenusReport> parse_json_table(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(e.what());
  }
  if (!doc.is_array()) throw schema_error("JSON table must be an array");
  std::vector<GenusReport> out;
  for (const Json& item : doc) out.push_back(report_from_json(item));
  return out;
}

TableRow to_row(const GenusReport& r) {
  return TableRow{r.knot.p(),      r.knot.q(),      r.k,
                  r.a,             r.ell,           r.beta1_F,
                  r.gamma3,        r.gamma4.lower,  r.gamma4.upper,
                  r.gamma4.exact,  r.gap_lower_bound.num(), r.gap_lower_bound.den(),
                  r.orientable_genus};
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const TableRow& r : rows) {
    out << r.p << ',' << r.q << ',' << r.k << ',' << r.a << ',' << r.ell << ',' << r.beta1_F << ','
        << r.gamma3 << ',' << r.gamma4_lower << ',' << r.gamma4_upper << ',' << optional_text(r.gamma4_exact)
        << ',' << r.gap_lb_num << ',' << r.gap_lb_den << ',' << r.orientable_genus << '\n';
  }
  return out.str();
}

std::vector<TableRow> parse_csv_table(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw schema_error("missing or wrong CSV header");

  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != 13) throw schema_error("CSV row " + std::to_string(i) + " needs 13 cells");
    TableRow r;
    std::array<Int*, 13> slots{&r.p,           &r.q,           &r.k,       &r.a,          &r.ell,
                               &r.beta1_F,     &r.gamma3,      &r.gamma4_lower, &r.gamma4_upper, nullptr,
                               &r.gap_lb_num,  &r.gap_lb_den,  &r.orientable_genus};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (slots[c]) {
        *slots[c] = require_decimal(cells[c]);
      } else if (!cells[c].empty()) {
        r.gamma4_exact = require_decimal(cells[c]);
      }
    }
    rows.push_back(r);
  }
  return rows;
}

std::string render_trace(const std::vector<PinchRecord>& trace) {
  std::ostringstream out;
  for (const PinchRecord& rec : trace) {
    const auto before = cf_expand(Fraction(rec.source.p(), rec.source.q()));
    const auto after = cf_expand(Fraction(rec.result.p(), rec.result.q()));
    out << rec.source << " -> " << rec.result << "  t=" << rec.witness.t << " h=" << rec.witness.h << "  "
        << to_string(rec.sign) << "  " << before << " -> " << after << '\n';
  }
  return out.str();
}

std::string render_report(const GenusReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return report_to_json(r).dump(2) + "\n";
  if (format == OutputFormat::Csv) return render_csv({to_row(r)});

  std::ostringstream out;
  out << r.knot << "\n";
  out << "  continued fraction  " << r.knot.p() << "/" << r.knot.q() << " = "
      << cf_expand(Fraction(r.knot.p(), r.knot.q())) << "\n";
  out << "  division            p = " << r.knot.q() << "*" << r.k << " + " << r.a << "  (k=" << r.k
      << ", a=" << r.a << ")\n";
  out << "  terminal unknot     T(" << r.ell << ",1)  (ell=" << r.ell << ")\n";
  out << "  beta1(F)            " << r.beta1_F << "\n";
  out << "  gamma3              " << r.gamma3 << "\n";
  out << "  gamma4              " << r.gamma4.lower << " <= gamma4 <= " << r.gamma4.upper;
  if (r.gamma4.exact) out << ", exact " << *r.gamma4.exact << " (" << to_string(r.gamma4.provenance) << ")";
  out << "\n";
  if (is_even(r.knot.p())) {
    out << "  gap bound           gamma3 - gamma4 >= " << r.gap_lower_bound << "\n";
  }
  if (r.split) out << "  split               " << r.split->t1 << " + " << r.split->t2 << "\n";
  out << "  orientable genus    " << r.orientable_genus << "\n";
  out << "  pinch trace (F)\n";
  std::istringstream lines(render_trace(r.trace));
  for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  return out.str();
}

std::string render_table(const std::vector<GenusReport>& reports, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
  }
  std::vector<TableRow> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(to_row(r));
  if (format == OutputFormat::Csv) return render_csv(rows);

  // Human: the CSV columns, right-aligned.
  const std::string csv = render_csv(rows);
  std::vector<std::vector<std::string>> cells;
  for (const auto& line : split(csv, '\n')) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    for (auto c : split(line, ',')) row.emplace_back(c.empty() ? "-" : std::string(c));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_outcomes(const std::vector<verify::CheckOutcome>& outcomes, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& o : outcomes) {
        Json ces = Json::array();
        for (const auto& ce : o.counterexamples) {
          ces.push_back(Json{{"input", ce.input}, {"expected", ce.expected}, {"actual", ce.actual}});
        }
        arr.push_back(Json{{"check", o.check_name},
                           {"range", o.range_description},
                           {"cases_checked", o.cases_checked},
                           {"passed", o.passed()},
                           {"failures", o.total_failures},
                           {"counterexamples", ces}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "check,range,cases_checked,failures,status\n";
      for (const auto& o : outcomes) {
        out << o.check_name << ',' << csv_escape(o.range_description) << ',' << o.cases_checked << ','
            << o.total_failures << ',' << (o.passed() ? "pass" : "fail") << '\n';
      }
      break;
    case OutputFormat::Human:
      for (const auto& o : outcomes) {
        out << (o.passed() ? "PASS  " : "FAIL  ") << o.check_name << "  [" << o.range_description << "]  "
            << o.cases_checked << " cases";
        if (!o.passed()) out << ", " << o.total_failures << " failures";
        out << '\n';
        for (const auto& ce : o.counterexamples) {
          out << "      " << ce.input << ": expected " << ce.expected << ", got " << ce.actual << '\n';
        }
        if (o.truncated()) {
          out << "      ... " << (o.total_failures - o.counterexamples.size()) << " more\n";
        }
      }
      break;
  }
  return out.str();
}

}  // namespace crosscap
