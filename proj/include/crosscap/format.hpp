#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crosscap/genus.hpp"
#include "crosscap/verify.hpp"

namespace crosscap {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Human, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view text);

/// Strict decimal: one or more ASCII digits, no sign, no whitespace, no
/// prefix, and must fit in Int.
std::optional<Int> parse_decimal(std::string_view text);

enum class TableFilter { All, Even, Odd, Batson, FamilyKm1 };

std::optional<TableFilter> parse_filter(std::string_view text);
bool passes_filter(const TorusKnot& knot, TableFilter filter);

/// Reports for every normalized nontrivial knot with p <= pmax, q <= qmax
/// passing the filter, in (p, q) order.
std::vector<GenusReport> build_table(Int pmax, Int qmax, TableFilter filter);

// -- JSON ---------------------------------------------------------------

Json report_to_json(const GenusReport& report);
/// Inverse of report_to_json. The odd split is not part of the schema and
/// comes back empty. Throws InvalidArgument on schema violations.
GenusReport report_from_json(const Json& j);

std::vector<GenusReport> parse_json_table(std::string_view text);

// -- CSV ----------------------------------------------------------------

/// One flat CSV row; gamma4_exact is an empty cell when absent.
struct TableRow {
  Int p = 0;
  Int q = 0;
  Int k = 0;
  Int a = 0;
  Int ell = 0;
  Int beta1_F = 0;
  Int gamma3 = 0;
  Int gamma4_lower = 0;
  Int gamma4_upper = 0;
  std::optional<Int> gamma4_exact;
  Int gap_lb_num = 0;
  Int gap_lb_den = 1;
  Int orientable_genus = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "p,q,k,a,ell,beta1_F,gamma3,gamma4_lower,gamma4_upper,gamma4_exact,gap_lb_num,gap_lb_den,orientable_genus";

TableRow to_row(const GenusReport& report);
std::string render_csv(const std::vector<TableRow>& rows);
/// Throws InvalidArgument on a bad header, wrong column count or a
/// non-decimal cell.
std::vector<TableRow> parse_csv_table(std::string_view text);

// -- Rendering ----------------------------------------------------------

std::string render_report(const GenusReport& report, OutputFormat format);
std::string render_table(const std::vector<GenusReport>& reports, OutputFormat format);
std::string render_trace(const std::vector<PinchRecord>& trace);
std::string render_outcomes(const std::vector<verify::CheckOutcome>& outcomes, OutputFormat format);

}  // namespace crosscap
