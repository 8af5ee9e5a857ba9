#include "artin/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace artin {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::logic_error("format_double: non-finite value");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::logic_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string format_field(const FieldValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) return format_double(x);
            else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>) return x;
            else return std::to_string(x);
        },
        v);
}

namespace {

void check_layout(std::span<const OutputRecord> records) {
    if (records.empty()) return;
    const auto& first = records.front();
    for (const auto& rec : records) {
        if (rec.kind != first.kind || rec.fields.size() != first.fields.size())
            throw std::logic_error("write_csv: mixed record layouts");
        for (std::size_t i = 0; i < rec.fields.size(); ++i)
            if (rec.fields[i].first != first.fields[i].first)
                throw std::logic_error("write_csv: mixed record layouts");
    }
}

nlohmann::ordered_json field_to_json(const FieldValue& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(x)) throw std::logic_error("render_json: non-finite value");
                return x;
            } else {
                return x;
            }
        },
        v);
}

std::vector<std::string> kind_order(std::span<const OutputRecord> records) {
    std::vector<std::string> kinds;
    for (const auto& rec : records) {
        bool seen = false;
        for (const auto& k : kinds) seen = seen || k == rec.kind;
        if (!seen) kinds.push_back(rec.kind);
    }
    return kinds;
}

std::vector<OutputRecord> of_kind(std::span<const OutputRecord> records, const std::string& kind) {
    std::vector<OutputRecord> out;
    for (const auto& rec : records)
        if (rec.kind == kind) out.push_back(rec);
    return out;
}

}  // namespace

void write_csv(std::ostream& os, std::span<const OutputRecord> records) {
    check_layout(records);
    if (records.empty()) return;
    os << "schema";
    for (const auto& [name, value] : records.front().fields) os << ',' << name;
    os << '\n';
    for (const auto& rec : records) {
        os << '1';
        for (const auto& [name, value] : rec.fields) os << ',' << format_field(value);
        os << '\n';
    }
}

std::string render_json(std::span<const OutputRecord> records) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    for (const auto& kind : kind_order(records)) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : of_kind(records, kind)) {
            nlohmann::ordered_json obj;
            for (const auto& [name, value] : rec.fields) obj[name] = field_to_json(value);
            arr.push_back(std::move(obj));
        }
        doc[kind] = std::move(arr);
    }
    return doc.dump(2);
}

void write_report(std::span<const OutputRecord> records, OutputFormat format,
                  const std::string& out) {
    if (format == OutputFormat::Json) {
        std::string body = render_json(records);
        if (out.empty()) {
            std::cout << body << '\n';
            return;
        }
        std::ofstream f(out);
        if (!f) throw io_error("cannot open " + out);
        f << body << '\n';
        if (!f.good()) throw io_error("write failed: " + out);
        return;
    }
    if (out.empty()) {
        for (const auto& kind : kind_order(records)) {
            std::cout << "# kind=" << kind << '\n';
            auto group = of_kind(records, kind);
            write_csv(std::cout, group);
        }
        return;
    }
    std::string base = out;
    if (base.size() > 4 && base.ends_with(".csv")) base.resize(base.size() - 4);
    for (const auto& kind : kind_order(records)) {
        const std::string path = base + "_" + kind + ".csv";
        std::ofstream f(path);
        if (!f) throw io_error("cannot open " + path);
        auto group = of_kind(records, kind);
        write_csv(f, group);
        if (!f.good()) throw io_error("write failed: " + path);
    }
}

}  // namespace artin
