#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/cycproduct.hpp"
#include "blockcheck/liedata.hpp"

namespace blockcheck {

enum class QCondition { any, q1mod4, q3mod4, qsq_two_part_8 };

std::string q_condition_name(QCondition c);
bool q_condition_holds(QCondition c, const Int& q);
/// The two smallest odd prime powers in {3,5,7,9,11,13} satisfying c.
std::vector<Int> smallest_admissible_q(QCondition c);

/// One row of a small-defect table: the centraliser data, the claimed
/// a_chi * chi(1)_{r'} product and 2-defect, and the condition on q.
struct DefectRow {
    std::string row_id;                    // "i" .. "xviii"
    std::string delta_s;                   // Dynkin type of the semisimple part, "" for tori
    std::optional<LieSeries> c_prime;      // derived subgroup series, empty when a torus
    CycProduct z_s;                        // |Z(C)^F| as a Phi-product
    std::string lambda_label;              // unipotent label, "" for trivial
    CycProduct claimed_product;            // a_chi * chi(1)_{r'}
    long claimed_defect;
    QCondition condition;
};

const std::vector<DefectRow>& e6_defect_table();
const std::vector<DefectRow>& twisted_e6_defect_table();

/// r'-part of the degree of the row's unipotent label over its C' series.
CycProduct row_lambda_rprime(const DefectRow& row);

struct RowCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct RowReport {
    std::string row_id;
    Int q;
    std::vector<RowCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Verifies one row at an admissible odd q:
///  (a) v2(order') - v2(product) equals the claimed defect,
///  (b) product equals order'/(z * order'(C')) * lambda_{r'} when C' is known
///      (for tori: product * z = order' exactly),
///  (c) zeta_s + defect(lambda) equals the claimed defect.
RowReport verify_row(const DefectRow& row, const LieSeries& ambient, const Int& q);

/// Transforms an E6 row by q -> -q and matches it against the corresponding
/// twisted-table row (product, z, condition and lambda degree).
bool rows_mirror(const DefectRow& e6_row, const DefectRow& twisted_row);

/// Transcription audit: each stored row next to the product recomputed from
/// the order/centraliser/label data, aligned for human diffing.
std::string audit_table_text(const std::vector<DefectRow>& rows, const LieSeries& ambient);

/// F4 isolated-centraliser check: for every listed centraliser type the
/// achievable 2-defects at q avoid {1, 2, 3} entirely (defect 0 occurs only
/// for the F4 cuspidal pair and is excluded as a defect-0 block).
struct F4Report {
    struct Entry {
        std::string centraliser;
        std::vector<long> small_defects;  // achievable defects <= 3
        bool pass;
    };
    std::vector<Entry> entries;
    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};
F4Report verify_f4_isolated(const Int& q);

/// E8 height-zero contradiction arithmetic at q with (q^2-1)_+ = 8:
/// the displayed degree identities hold, the four height-zero candidates
/// share one degree, and p3 divides 2 Phi1 Phi3^2 but not q Phi2.
struct E8Report {
    Int q;
    Int p3;
    bool identities = false;
    bool shared_degree = false;
    bool p3_divides_second = false;
    bool p3_not_divides_first = false;
    bool pass() const { return identities && shared_degree && p3_divides_second && p3_not_divides_first; }
};
E8Report verify_e8_contradiction(const Int& q);

}  // namespace blockcheck
