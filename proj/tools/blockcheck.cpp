// blockcheck: exact verification suites for 2-block character arithmetic.
//
// Subcommands run independent check suites and write machine-readable and
// plain-text reports; exit status 0 means every check passed, 2 means some
// check failed, 1 is a usage error.

#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "blockcheck/char_table.hpp"
#include "blockcheck/defect_tables.hpp"
#include "blockcheck/finite_group.hpp"
#include "blockcheck/liedata.hpp"
#include "blockcheck/report.hpp"
#include "blockcheck/suites.hpp"

using namespace blockcheck;

namespace {

struct Options {
    std::vector<long> qset = default_q_set();
    unsigned lmax = 8;
    unsigned rankmax = 8;
    unsigned nmax = 20;
    unsigned isometry_case = 0;  // 0 = all three
    bool quick = false;
    bool audit = false;
    bool full_table = false;
    bool print_tables = false;
    std::string report_dir;
    std::string data_file;
};

void validate_qset(const std::vector<long>& qset) {
    for (long q : qset)
        if (q < 3 || q % 2 == 0) throw CLI::ValidationError("--qset", "q must be odd and at least 3");
}

int emit(const Report& rep, const Options& opt) {
    std::cout << rep.to_text();
    if (!opt.report_dir.empty()) {
        std::string base = write_report_files(rep, opt.report_dir);
        std::cout << "report written to " << base << ".{json,txt}\n";
    }
    return rep.pass() ? 0 : 2;
}

Report run_all(const Options& opt) {
    std::vector<long> qset = opt.qset;
    unsigned lmax = opt.quick ? 5 : opt.lmax;
    unsigned rankmax = opt.quick ? 6 : opt.rankmax;
    unsigned nmax = opt.quick ? 12 : opt.nmax;
    if (opt.quick) qset = {3, 5, 7, 9};

    std::vector<std::future<Report>> jobs;
    jobs.push_back(std::async(std::launch::async, suite_local_groups));
    jobs.push_back(std::async(std::launch::async, suite_landrock));
    jobs.push_back(std::async(std::launch::async, suite_norm8));
    jobs.push_back(std::async(std::launch::async, [lmax, qset] { return suite_classical_defects(lmax, qset); }));
    jobs.push_back(std::async(std::launch::async, [rankmax] { return suite_symbol_identity(rankmax); }));
    jobs.push_back(std::async(std::launch::async, [qset] { return suite_tables_e6(qset); }));
    jobs.push_back(std::async(std::launch::async, [qset] { return suite_f4(qset); }));
    jobs.push_back(std::async(std::launch::async, [qset] { return suite_e8(qset); }));
    jobs.push_back(std::async(std::launch::async, [qset, nmax] { return suite_zsigmondy(qset, nmax); }));
    jobs.push_back(std::async(std::launch::async, [qset] { return suite_sylow(qset); }));
    for (unsigned c : {3u, 7u, 21u})
        jobs.push_back(std::async(std::launch::async, [c] { return suite_isometry(c); }));

    Report all("all");
    for (auto& j : jobs) all.merge(j.get());
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of 2-block character-theoretic arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    Options opt;
    app.add_option("--report-dir", opt.report_dir, "directory for json/txt report files");
    app.add_option("--data", opt.data_file, "optional unipotent-degree catalog (one JSON record per line)");

    auto add_qset = [&](CLI::App* cmd) {
        cmd->add_option("--qset,--q", opt.qset, "odd prime powers to evaluate at")->expected(-1);
    };

    CLI::App* c_local = app.add_subcommand("local-groups", "character tables, lattices and basis shapes");
    c_local->add_flag("--print-tables", opt.print_tables, "dump the character tables (text and JSON)");
    CLI::App* c_landrock = app.add_subcommand("landrock", "character-count decision table");
    CLI::App* c_norm8 = app.add_subcommand("norm8", "norm-8 coefficient support enumeration");
    CLI::App* c_classical = app.add_subcommand("classical-defects", "classical-type minimum 2-defect scans");
    c_classical->add_option("--lmax", opt.lmax, "largest rank to scan");
    c_classical->add_flag("--full", opt.full_table, "emit the full per-label degree/defect table");
    add_qset(c_classical);
    CLI::App* c_symbol = app.add_subcommand("symbol-identity", "exhaustive symbol combinatorics");
    c_symbol->add_option("--rankmax", opt.rankmax, "largest symbol rank");
    CLI::App* c_tables = app.add_subcommand("tables-e6", "small-defect tables with the twisted transform");
    c_tables->add_flag("--audit", opt.audit, "print stored rows next to recomputed products");
    add_qset(c_tables);
    CLI::App* c_f4 = app.add_subcommand("f4", "isolated-centraliser defect exclusion");
    add_qset(c_f4);
    CLI::App* c_e8 = app.add_subcommand("e8", "height-zero degree contradiction arithmetic");
    add_qset(c_e8);
    CLI::App* c_zsig = app.add_subcommand("zsigmondy", "primitive prime divisors");
    c_zsig->add_option("--nmax", opt.nmax, "largest exponent n");
    add_qset(c_zsig);
    CLI::App* c_sylow = app.add_subcommand("sylow", "Sylow 2-subgroup recognition in matrix groups");
    add_qset(c_sylow);
    CLI::App* c_iso = app.add_subcommand("isometry", "partial-isometry extension and perfectness");
    c_iso->add_option("--case", opt.isometry_case, "inertial quotient order (3, 7 or 21)")
        ->check(CLI::IsMember({3, 7, 21}));
    CLI::App* c_all = app.add_subcommand("all", "every suite");
    c_all->add_flag("--quick", opt.quick, "reduced ranks and q values");
    add_qset(c_all);

    CLI11_PARSE(app, argc, argv);

    try {
        validate_qset(opt.qset);
        std::vector<NamedUnipotent> extra;
        if (!opt.data_file.empty()) {
            extra = load_degree_catalog(opt.data_file);
            std::cout << "loaded " << extra.size() << " catalog records (validated at q=3)\n";
        }
        if (c_local->parsed()) {
            if (opt.print_tables) {
                for (unsigned e : {1u, 3u, 7u, 21u}) {
                    FiniteGroup g =
                        build_semidirect(3, gl3f2_odd_subgroup(e), "P:E" + std::to_string(e));
                    CharacterTable t = character_table(g);
                    std::cout << t.to_text() << t.to_json() << "\n";
                }
            }
            return emit(suite_local_groups(), opt);
        }
        if (c_landrock->parsed()) return emit(suite_landrock(), opt);
        if (c_norm8->parsed()) return emit(suite_norm8(), opt);
        if (c_classical->parsed()) {
            if (opt.full_table) std::cout << scan_table_text(opt.lmax, opt.qset);
            return emit(suite_classical_defects(opt.lmax, opt.qset), opt);
        }
        if (c_symbol->parsed()) return emit(suite_symbol_identity(opt.rankmax), opt);
        if (c_tables->parsed()) {
            if (opt.audit) {
                std::cout << audit_table_text(e6_defect_table(), LieSeries{LieFamily::E6, 6});
                std::cout << audit_table_text(twisted_e6_defect_table(), LieSeries{LieFamily::TwoE6, 6});
            }
            Report rep = suite_tables_e6(opt.qset);
            if (!extra.empty()) rep.merge(suite_conditional(extra, opt.qset));
            return emit(rep, opt);
        }
        if (c_f4->parsed()) return emit(suite_f4(opt.qset), opt);
        if (c_e8->parsed()) return emit(suite_e8(opt.qset), opt);
        if (c_zsig->parsed()) return emit(suite_zsigmondy(opt.qset, opt.nmax), opt);
        if (c_sylow->parsed()) return emit(suite_sylow(opt.qset), opt);
        if (c_iso->parsed()) {
            if (opt.isometry_case != 0) return emit(suite_isometry(opt.isometry_case), opt);
            Report rep("isometry");
            for (unsigned c : {3u, 7u, 21u}) rep.merge(suite_isometry(c));
            return emit(rep, opt);
        }
        if (c_all->parsed()) {
            Report rep = run_all(opt);
            if (!extra.empty()) rep.merge(suite_conditional(extra, opt.quick ? std::vector<long>{3, 5, 7, 9} : opt.qset));
            return emit(rep, opt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
