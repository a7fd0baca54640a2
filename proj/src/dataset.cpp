#include "ltsp/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace ltsp {

namespace {

constexpr const char* kTapeHeader = "id,cumulative_position,segment_size,index";
constexpr const char* kRequestHeader = "index,nb_requests";

std::vector<std::string> read_lines(const std::filesystem::path& path,
                                    const std::string& what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(what + ": cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

int64_t parse_int(const std::string& field, const std::string& where) {
    int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw FormatError(where + ": malformed integer field '" + field + "'");
    return value;
}

std::vector<std::string> split_fields(const std::string& line, size_t expected,
                                      const std::string& where) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (fields.size() != expected)
        throw FormatError(where + ": expected " + std::to_string(expected) +
                          " fields, got " + std::to_string(fields.size()));
    for (const auto& f : fields) {
        if (f.empty() || f.find_first_of(" \t") != std::string::npos)
            throw FormatError(where + ": empty or whitespace-bearing field");
    }
    return fields;
}

int64_t round_half_away(int64_t numerator, int64_t denominator) {
    // Nonnegative inputs only; round half up equals half away from zero.
    return (2 * numerator + denominator) / (2 * denominator);
}

template <typename T>
T lower_median(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

IntAggregate aggregate_int(const std::vector<int64_t>& values) {
    IntAggregate agg;
    agg.min = *std::min_element(values.begin(), values.end());
    agg.max = *std::max_element(values.begin(), values.end());
    agg.median = lower_median(values);
    const int64_t total = std::accumulate(values.begin(), values.end(), int64_t{0});
    agg.mean = round_half_away(total, static_cast<int64_t>(values.size()));
    return agg;
}

RealAggregate aggregate_real(const std::vector<double>& values) {
    RealAggregate agg;
    agg.min = *std::min_element(values.begin(), values.end());
    agg.max = *std::max_element(values.begin(), values.end());
    agg.median = lower_median(values);
    agg.mean = std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    return agg;
}

}  // namespace

TapeRecord read_tape_file(const std::filesystem::path& path,
                          const std::string& name) {
    const auto lines = read_lines(path, "tape file for " + name);
    if (lines.empty() || lines[0] != kTapeHeader)
        throw HeaderMismatch("tape file for " + name + ": header must be '" +
                             std::string(kTapeHeader) + "'");
    TapeRecord tape;
    tape.name = name;
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::string where = name + " tape row " + std::to_string(i);
        const auto f = split_fields(lines[i], 4, where);
        SegmentRow row;
        row.id = parse_int(f[0], where);
        row.cumulative_position = parse_int(f[1], where);
        row.segment_size = parse_int(f[2], where);
        row.index = parse_int(f[3], where);
        tape.segments.push_back(row);
    }
    return tape;
}

RequestRecord read_request_file(const std::filesystem::path& path,
                                const std::string& name) {
    const auto lines = read_lines(path, "request file for " + name);
    if (lines.empty() || lines[0] != kRequestHeader)
        throw HeaderMismatch("request file for " + name + ": header must be '" +
                             std::string(kRequestHeader) + "'");
    RequestRecord req;
    req.name = name;
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::string where = name + " request row " + std::to_string(i);
        const auto f = split_fields(lines[i], 2, where);
        RequestRow row;
        row.index = parse_int(f[0], where);
        row.nb_requests = parse_int(f[1], where);
        if (row.nb_requests < 1)
            throw FormatError(where + ": nb_requests must be >= 1");
        req.rows.push_back(row);
    }
    return req;
}

void write_tape_file(const std::filesystem::path& path, const TapeRecord& tape) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingFile("cannot write " + path.string());
    out << kTapeHeader << '\n';
    for (const auto& s : tape.segments)
        out << s.id << ',' << s.cumulative_position << ',' << s.segment_size
            << ',' << s.index << '\n';
}

void write_request_file(const std::filesystem::path& path,
                        const RequestRecord& req) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingFile("cannot write " + path.string());
    out << kRequestHeader << '\n';
    for (const auto& r : req.rows) out << r.index << ',' << r.nb_requests << '\n';
}

Instance to_instance(const TapeRecord& tape, const RequestRecord& req) {
    if (tape.segments.empty())
        throw EmptyTapeError("tape " + tape.name + " has no segments");

    // Detect whether cumulative_position is the segment's left or right edge.
    const bool right_edge =
        tape.segments[0].cumulative_position == tape.segments[0].segment_size &&
        tape.segments[0].cumulative_position != 0;
    int64_t running = 0;
    for (size_t i = 0; i < tape.segments.size(); ++i) {
        const auto& s = tape.segments[i];
        if (s.segment_size <= 0)
            throw NonPositiveSizeError("tape " + tape.name + " segment " +
                                       std::to_string(i) + " has size " +
                                       std::to_string(s.segment_size));
        const int64_t expected = right_edge ? running + s.segment_size : running;
        if (s.cumulative_position != expected)
            throw InconsistentCumulative(
                "tape " + tape.name + " segment " + std::to_string(i) +
                ": cumulative_position " + std::to_string(s.cumulative_position) +
                " does not match running sum " + std::to_string(expected));
        running += s.segment_size;
    }

    // Consecutive segments with the same index belong to one file.
    std::vector<int64_t> sizes;
    int64_t last_index = 0;
    for (const auto& s : tape.segments) {
        if (s.index == last_index) {
            sizes.back() += s.segment_size;
        } else if (s.index == last_index + 1) {
            sizes.push_back(s.segment_size);
            last_index = s.index;
        } else {
            throw FormatError("tape " + tape.name + ": file index " +
                              std::to_string(s.index) + " after " +
                              std::to_string(last_index) +
                              "; indices must be consecutive from 1");
        }
    }

    std::map<int, int64_t> mult;
    for (const auto& r : req.rows) {
        if (r.index < 1 || r.index > static_cast<int64_t>(sizes.size()))
            throw UnknownRequestIndex("tape " + tape.name + ": request index " +
                                      std::to_string(r.index) + " outside 1.." +
                                      std::to_string(sizes.size()));
        if (!mult.emplace(static_cast<int>(r.index), r.nb_requests).second)
            throw FormatError("tape " + tape.name + ": duplicate request index " +
                              std::to_string(r.index));
    }
    return build_instance(sizes, mult);
}

std::vector<CorpusEntry> parse_corpus(const std::filesystem::path& root) {
    const auto names = read_lines(root / "list_of_tape.txt", "tape list");
    std::vector<CorpusEntry> entries;
    for (const std::string& raw : names) {
        if (raw.empty()) continue;
        // The list stores file names like TAPE001.txt; entries keep the stem.
        std::string name = raw;
        std::string fname = raw;
        if (name.ends_with(".txt"))
            name = name.substr(0, name.size() - 4);
        else
            fname += ".txt";
        const auto tape = read_tape_file(root / "tapes" / fname, name);
        const auto req = read_request_file(root / "requests" / fname, name);
        entries.push_back({name, to_instance(tape, req)});
    }
    if (entries.empty()) throw EmptyCorpus("tape list is empty");
    return entries;
}

CorpusStats corpus_stats(const std::vector<CorpusEntry>& entries) {
    if (entries.empty()) throw EmptyCorpus("no instances to summarize");
    CorpusStats stats;
    std::vector<int64_t> nf, nreq, n;
    std::vector<double> means, cvs;
    for (const auto& e : entries) {
        const Instance& inst = e.instance;
        TapeStats ts;
        ts.name = e.name;
        ts.n_f = inst.n_files();
        ts.n_req = inst.n_req();
        ts.n = inst.n;
        ts.mean_size = static_cast<double>(inst.m) / inst.n_files();
        double var = 0;
        for (const auto& f : inst.files) {
            const double d = static_cast<double>(f.size) - ts.mean_size;
            var += d * d;
        }
        var /= inst.n_files();
        ts.size_cv = ts.mean_size > 0 ? std::sqrt(var) / ts.mean_size : 0;
        nf.push_back(ts.n_f);
        nreq.push_back(ts.n_req);
        n.push_back(ts.n);
        means.push_back(ts.mean_size);
        cvs.push_back(ts.size_cv);
        stats.per_tape.push_back(std::move(ts));
    }
    stats.n_f = aggregate_int(nf);
    stats.n_req = aggregate_int(nreq);
    stats.n = aggregate_int(n);
    stats.mean_size = aggregate_real(means);
    stats.size_cv = aggregate_real(cvs);
    return stats;
}

Penalties derive_penalties(const std::vector<CorpusEntry>& entries) {
    if (entries.empty()) throw EmptyCorpus("no instances to derive penalties from");
    int64_t total = 0;
    int64_t count = 0;
    for (const auto& e : entries) {
        total += e.instance.m;
        count += e.instance.n_files();
    }
    Penalties p;
    p.full = round_half_away(total, count);
    p.half = round_half_away(p.full, 2);
    return p;
}

}  // namespace ltsp
