/**
 * @file report.cpp
 * @brief Record bookkeeping and jsonl / csv / text emission.
 */

#include "qpl/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qpl::cli {

Digest& Digest::update(std::string_view bytes) noexcept {
    for (unsigned char ch : bytes) {
        h_ ^= ch;
        h_ *= 0x100000001b3ULL;
    }
    return *this;
}

Digest& Digest::field(std::string_view bytes) noexcept {
    update(std::to_string(bytes.size()));
    update(":");
    return update(bytes);
}

std::string Digest::hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
}

Record& RunReport::add_value(const std::string& name, Record value, const std::string& provenance) {
    Record r;
    r["command"] = command;
    r["name"] = name;
    r["value"] = std::move(value);
    r["provenance"] = provenance;
    records.push_back(std::move(r));
    return records.back();
}

Record& RunReport::add_check(const std::string& name, bool verdict, const std::string& provenance) {
    Record r;
    r["command"] = command;
    r["name"] = name;
    r["verdict"] = verdict;
    r["provenance"] = provenance;
    ++checks;
    if (!verdict) ++failures;
    records.push_back(std::move(r));
    return records.back();
}

Record RunReport::summary() const {
    Record r;
    r["command"] = command;
    r["name"] = "summary";
    r["verdict"] = all_passed();
    r["provenance"] = "run";
    r["inputs_digest"] = inputs_digest;
    r["records"] = records.size();
    r["checks"] = checks;
    r["failures"] = failures;
    r["exit_code"] = exit_code();
    return r;
}

namespace {

std::string scalar_text(const Record& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

void write_report(const RunReport& report, OutputFormat format, std::ostream& out) {
    std::vector<Record> all = report.records;
    all.push_back(report.summary());
    switch (format) {
        case OutputFormat::Jsonl:
            for (const auto& r : all) out << r.dump() << '\n';
            break;
        case OutputFormat::Text:
            for (const auto& r : all) {
                out << scalar_text(r["name"]);
                for (const auto& [k, v] : r.items())
                    if (k != "name" && k != "command") out << "  " << k << "=" << scalar_text(v);
                out << '\n';
            }
            break;
        case OutputFormat::Csv: {
            // Columns are the union of keys in order of first appearance.
            std::vector<std::string> cols;
            for (const auto& r : all)
                for (const auto& [k, v] : r.items())
                    if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
            for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(cols[c]);
            out << '\n';
            for (const auto& r : all) {
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    if (c) out << ',';
                    if (r.contains(cols[c])) out << csv_escape(scalar_text(r[cols[c]]));
                }
                out << '\n';
            }
            break;
        }
    }
}

}  // namespace qpl::cli
