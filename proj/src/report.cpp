#include "latform/report.hpp"

#include <iomanip>
#include <sstream>

namespace latform {

namespace {

// left-justified cell with at least one trailing space even on overflow
std::string pad(const std::string& s, std::size_t width) {
    return s.size() + 1 >= width ? s + ' ' : s + std::string(width - s.size(), ' ');
}

std::string pad(int v, std::size_t width) {
    return pad(std::to_string(v), width);
}

std::string shells_str(const std::vector<ShellCount>& shells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < shells.size(); ++i) {
        if (i) os << ' ';
        os << shells[i].count.get_str();
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const DetReport& r) {
    return {{"lattice", r.lattice},
            {"n", r.n},
            {"oracle_det", r.oracle_det.get_str()},
            {"closed_S", r.closed_s.get_str()},
            {"closed_2S", r.closed_2s.get_str()},
            {"matches", r.matches},
            {"index_a_b", r.index_a_b.get_str()},
            {"gram_sign", r.gram_sign},
            {"recombination", r.recombination}};
}

nlohmann::json to_json(const VoaDetReport& r) {
    nlohmann::json shells = nlohmann::json::array();
    for (const auto& s : r.shells)
        shells.push_back({{"norm", s.norm}, {"count", s.count.get_str()}});
    return {{"lattice", r.lattice},
            {"n", r.n},
            {"oracle_det", r.oracle_det.get_str()},
            {"closed_S", r.closed_s.get_str()},
            {"closed_2S", r.closed_2s.get_str()},
            {"matches", r.matches},
            {"shells", shells}};
}

nlohmann::json to_json(const VerifySummary& s) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    nlohmann::json m1 = nlohmann::json::array();
    for (const auto& r : s.m1_reports) m1.push_back(to_json(r));
    nlohmann::json voa = nlohmann::json::array();
    for (const auto& r : s.voa_reports) voa.push_back(to_json(r));
    return {{"checks", checks},
            {"adjudicated_mode", s.adjudicated_mode},
            {"all_pass", s.all_pass()},
            {"m1_reports", m1},
            {"voa_reports", voa}};
}

std::string det_reports_csv(const std::vector<DetReport>& reports) {
    std::ostringstream os;
    os << "lattice,n,oracle_det,closed_S,closed_2S,matches,index_a_b,gram_sign,recombination\n";
    for (const auto& r : reports)
        os << r.lattice << ',' << r.n << ',' << r.oracle_det.get_str() << ','
           << r.closed_s.get_str() << ',' << r.closed_2s.get_str() << ",\"" << r.matches
           << "\"," << r.index_a_b.get_str() << ',' << r.gram_sign << ',' << r.recombination
           << '\n';
    return os.str();
}

std::string voa_reports_csv(const std::vector<VoaDetReport>& reports) {
    std::ostringstream os;
    os << "lattice,n,oracle_det,closed_S,closed_2S,matches,shell_counts\n";
    for (const auto& r : reports)
        os << r.lattice << ',' << r.n << ',' << r.oracle_det.get_str() << ','
           << r.closed_s.get_str() << ',' << r.closed_2s.get_str() << ",\"" << r.matches
           << "\",\"" << shells_str(r.shells) << "\"\n";
    return os.str();
}

std::string summary_csv(const VerifySummary& s) {
    std::ostringstream os;
    os << "check,pass,details\n";
    for (const auto& c : s.checks)
        os << c.name << ',' << (c.pass ? "true" : "false") << ",\"" << c.details << "\"\n";
    os << "adjudicated_mode," << s.adjudicated_mode << ",\n";
    os << "all_pass," << (s.all_pass() ? "true" : "false") << ",\n";
    return os.str();
}

std::string det_reports_table(const std::vector<DetReport>& reports) {
    std::ostringstream os;
    os << pad("lattice", 10) << pad("n", 4) << pad("oracle", 16) << pad("closed_S", 16)
       << pad("closed_2S", 18) << pad("matches", 8) << pad("index_a_b", 12) << "recomb\n";
    for (const auto& r : reports)
        os << pad(r.lattice, 10) << pad(r.n, 4) << pad(r.oracle_det.get_str(), 16)
           << pad(r.closed_s.get_str(), 16) << pad(r.closed_2s.get_str(), 18)
           << pad(r.matches, 8) << pad(r.index_a_b.get_str(), 12) << r.recombination << '\n';
    return os.str();
}

std::string voa_reports_table(const std::vector<VoaDetReport>& reports) {
    std::ostringstream os;
    os << pad("lattice", 10) << pad("n", 4) << pad("oracle", 16) << pad("closed_S", 16)
       << pad("closed_2S", 18) << pad("matches", 8) << "shells\n";
    for (const auto& r : reports)
        os << pad(r.lattice, 10) << pad(r.n, 4) << pad(r.oracle_det.get_str(), 16)
           << pad(r.closed_s.get_str(), 16) << pad(r.closed_2s.get_str(), 18)
           << pad(r.matches, 8) << shells_str(r.shells) << '\n';
    return os.str();
}

std::string summary_table(const VerifySummary& s) {
    std::ostringstream os;
    for (const auto& c : s.checks)
        os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(32) << c.name
           << c.details << '\n';
    os << "adjudicated exponent mode: " << s.adjudicated_mode << '\n';
    os << (s.all_pass() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
    return os.str();
}

}  // namespace latform
