#pragma once

#include <string>
#include <vector>

#include "blockcheck/liedata.hpp"
#include "blockcheck/report.hpp"

namespace blockcheck {

/// Default evaluation points {3, 5, 7, 9, 11, 13}, filtered per check by its
/// own q-condition.
std::vector<long> default_q_set();

/// The verification suites behind the CLI subcommands.  Each returns a report
/// with one record per check; suites are pure and independent.
Report suite_local_groups();
Report suite_landrock();
Report suite_norm8();
Report suite_classical_defects(unsigned lmax, const std::vector<long>& qset);
Report suite_symbol_identity(unsigned rankmax);
Report suite_tables_e6(const std::vector<long>& qset);
Report suite_f4(const std::vector<long>& qset);
Report suite_e8(const std::vector<long>& qset);
Report suite_zsigmondy(const std::vector<long>& qset, unsigned nmax);
Report suite_sylow(const std::vector<long>& qset);
Report suite_isometry(unsigned inertial_case);

/// Conditional checks over an ingested degree catalog: each record's 2-defect
/// must lie in the admissible defect set of its series.  These run only when
/// a data file is supplied and are marked "conditional" in the report.
Report suite_conditional(const std::vector<NamedUnipotent>& records, const std::vector<long>& qset);

/// Full per-label scan table: one line per unipotent label,
/// "family rank q label degree defect".
std::string scan_table_text(unsigned lmax, const std::vector<long>& qset);

}  // namespace blockcheck
