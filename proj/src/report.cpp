#include "blockcheck/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blockcheck {

void Report::add(const std::string& id, const std::string& claim, bool pass, const std::string& detail) {
    checks_.push_back({id, claim, pass, detail});
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks()) checks_.push_back(c);
}

size_t Report::failed() const {
    size_t n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

std::string Report::to_json(const std::string& timestamp) const {
    nlohmann::json j;
    j["schema"] = "blockcheck-report/1";
    j["generated_at"] = timestamp;
    j["suite"] = suite_;
    j["total"] = total();
    j["failed"] = failed();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json rec;
        rec["id"] = c.id;
        rec["claim"] = c.claim;
        rec["status"] = c.pass ? "pass" : "FAIL";
        rec["detail"] = c.detail;
        arr.push_back(rec);
    }
    j["checks"] = arr;
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite_ << "\n";
    size_t idw = 4;
    for (const auto& c : checks_) idw = std::max(idw, c.id.size());
    for (const auto& c : checks_) {
        os << (c.pass ? "  ok  " : " FAIL ") << c.id;
        for (size_t i = c.id.size(); i < idw + 2; ++i) os << ' ';
        os << c.claim;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << " (" << (total() - failed()) << "/" << total() << " checks)\n";
    return os.str();
}

std::string write_report_files(const Report& r, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::string base = (fs::path(dir) / r.suite()).string();
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    {
        std::ofstream out(base + ".json");
        out << r.to_json(buf) << "\n";
    }
    {
        std::ofstream out(base + ".txt");
        out << r.to_text();
    }
    return base;
}

}  // namespace blockcheck
