#pragma once

#include <string>
#include <vector>

namespace blockcheck {

/// One verification record: a stable check id, the mathematical claim it
/// exercises, pass/fail and free-form detail.
struct CheckRecord {
    std::string id;
    std::string claim;
    bool pass;
    std::string detail;
};

class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& id, const std::string& claim, bool pass, const std::string& detail = "");
    void merge(const Report& other);

    const std::string& suite() const { return suite_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    size_t total() const { return checks_.size(); }
    size_t failed() const;
    bool pass() const { return failed() == 0; }

    /// Versioned machine-readable form; the timestamp lives in an isolated
    /// header field so the body is byte-identical across runs.
    std::string to_json(const std::string& timestamp) const;
    std::string to_text() const;

private:
    std::string suite_;
    std::vector<CheckRecord> checks_;
};

/// Writes json + txt files under dir (created if needed); returns base path.
std::string write_report_files(const Report& r, const std::string& dir);

}  // namespace blockcheck
