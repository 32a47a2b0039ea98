#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruin/core.hpp"
#include "ruin/oracle.hpp"

namespace ruin {

/*
 * Report records emitted by the command-line tool.
 *
 * Values are rounded to 15 significant digits when a report is built, so the
 * JSON text round-trips exactly. Non-finite numbers are written as the
 * strings "inf" / "-inf"; undefined quantities are null.
 */

struct ParamsRecord
{
    double p{0};
    double s{0};
    int i0{1};
    double q{0};
    double omega{0};

    bool operator==(ParamsRecord const&) const = default;
};

struct Diagnostics
{
    double tau1{0};
    double tau2{0};
    std::optional<double> theta;
    std::optional<double> phi1;
    std::optional<double> phi2;

    bool operator==(Diagnostics const&) const = default;
};

struct AbsorptionRecord
{
    double p0{0};
    std::vector<double> pk;  //!< k = 1..kmax
    double tail_bound{0};
    double escape_mass{0};

    bool operator==(AbsorptionRecord const&) const = default;
};

struct TimesRecord
{
    double m_total{0};
    std::vector<double> et;  //!< k = 0..kmax, killed expectations
    double et_tail{0};
    std::string source;      //!< "analytic" or "exact"
    //! et_k / P(k); present only with --conditional
    std::optional<std::vector<std::optional<double>>> conditional;

    bool operator==(TimesRecord const&) const = default;
};

struct ExactInfo
{
    int truncation_k{0};
    double error_estimate{0};

    bool operator==(ExactInfo const&) const = default;
};

//! Barrier generating-function values X_{k i0}(z), k = 0..kmax.
struct MgfSummary
{
    double z{1};
    std::string source;  //!< "analytic", "dp" or "exact"
    std::vector<double> values;

    bool operator==(MgfSummary const&) const = default;
};

struct AnalyticReport
{
    ParamsRecord params;
    std::string strategy;
    std::string source;  //!< "analytic" or "exact"
    AbsorptionRecord absorption;
    TimesRecord times;
    Diagnostics diagnostics;
    std::optional<double> bc_ratio;
    std::optional<MgfSummary> mgf;
    std::optional<ExactInfo> exact;

    bool operator==(AnalyticReport const&) const = default;
};

struct MgfEntry
{
    std::int64_t position{0};
    double value{0};
    std::optional<double> oracle;

    bool operator==(MgfEntry const&) const = default;
};

struct MgfReport
{
    ParamsRecord params;
    std::string strategy;
    double z{1};
    std::string source;  //!< where value comes from; oracle is the other one
    std::vector<MgfEntry> barriers;  //!< k*i0 for k = 0..kmax
    std::vector<MgfEntry> interior;  //!< non-barrier states below 2 i0

    bool operator==(MgfReport const&) const = default;
};

struct SimStateRecord
{
    std::int64_t position{0};
    std::uint64_t count{0};
    double probability{0};
    double probability_se{0};
    double killed_time{0};
    double killed_time_se{0};
    std::optional<double> conditional_time;

    bool operator==(SimStateRecord const&) const = default;
};

struct SimReport
{
    ParamsRecord params;
    std::string strategy;
    std::string generator;
    std::uint64_t seed{0};
    std::uint64_t trials{0};
    std::uint64_t escaped{0};
    double mean_time{0};
    double mean_time_se{0};
    std::vector<SimStateRecord> states;

    bool operator==(SimReport const&) const = default;
};

struct CheckRecord
{
    std::string name;
    bool pass{false};
    double worst{0};
    double tolerance{0};
    std::string detail;

    bool operator==(CheckRecord const&) const = default;
};

struct VerifyReport
{
    bool pass{false};
    std::vector<CheckRecord> checks;

    bool operator==(VerifyReport const&) const = default;
};

//! Round to 15 significant digits; non-finite values pass through.
double round_sig15(double value);

ParamsRecord make_params_record(Instance const& inst);
Diagnostics make_diagnostics(Instance const& inst);

struct ReportOptions
{
    int kmax{64};
    double tol{1e-10};
    bool conditional{false};
    std::optional<double> z;  //!< barrier MGF values when set
    bool rounded{true};       //!< round to 15 significant digits
};

AnalyticReport build_analytic_report(Instance const& inst,
                                     ReportOptions const& opts);
//! Same layout, every number taken from the truncated-lattice solver.
AnalyticReport build_exact_report(Instance const& inst,
                                  ReportOptions const& opts);
MgfReport build_mgf_report(Instance const& inst,
                           double z,
                           ReportOptions const& opts);
SimReport build_sim_report(Instance const& inst,
                           SimResult const& result,
                           bool conditional);

void to_json(nlohmann::json& j, ParamsRecord const& r);
void from_json(nlohmann::json const& j, ParamsRecord& r);
void to_json(nlohmann::json& j, Diagnostics const& r);
void from_json(nlohmann::json const& j, Diagnostics& r);
void to_json(nlohmann::json& j, AbsorptionRecord const& r);
void from_json(nlohmann::json const& j, AbsorptionRecord& r);
void to_json(nlohmann::json& j, TimesRecord const& r);
void from_json(nlohmann::json const& j, TimesRecord& r);
void to_json(nlohmann::json& j, ExactInfo const& r);
void from_json(nlohmann::json const& j, ExactInfo& r);
void to_json(nlohmann::json& j, MgfSummary const& r);
void from_json(nlohmann::json const& j, MgfSummary& r);
void to_json(nlohmann::json& j, MgfEntry const& r);
void from_json(nlohmann::json const& j, MgfEntry& r);
void to_json(nlohmann::json& j, SimStateRecord const& r);
void from_json(nlohmann::json const& j, SimStateRecord& r);
void to_json(nlohmann::json& j, CheckRecord const& r);
void from_json(nlohmann::json const& j, CheckRecord& r);
void to_json(nlohmann::json& j, AnalyticReport const& r);
void from_json(nlohmann::json const& j, AnalyticReport& r);
void to_json(nlohmann::json& j, MgfReport const& r);
void from_json(nlohmann::json const& j, MgfReport& r);
void to_json(nlohmann::json& j, SimReport const& r);
void from_json(nlohmann::json const& j, SimReport& r);
void to_json(nlohmann::json& j, VerifyReport const& r);
void from_json(nlohmann::json const& j, VerifyReport& r);

//! Pretty JSON text with a trailing newline.
template<class T>
std::string emit_json(T const& report)
{
    nlohmann::json j = report;
    return j.dump(2) + "\n";
}

template<class T>
T parse_json(std::string const& text)
{
    return nlohmann::json::parse(text).get<T>();
}

// Human-readable tables (6 significant digits)
void write_table(std::ostream& os, AnalyticReport const& r);
void write_table(std::ostream& os, MgfReport const& r);
void write_table(std::ostream& os, SimReport const& r);
void write_table(std::ostream& os, VerifyReport const& r);

// CSV (full precision)
void write_csv(std::ostream& os, MgfReport const& r);
void write_csv(std::ostream& os, SimReport const& r);
void write_csv(std::ostream& os, VerifyReport const& r);

//! Shortest round-trip formatting shared by the CSV writers.
std::string format_full(double value);

}  // namespace ruin
