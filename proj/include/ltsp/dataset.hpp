#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ltsp/model.hpp"

namespace ltsp {

struct MissingFile : Error {
    using Error::Error;
};
struct HeaderMismatch : Error {
    using Error::Error;
};
struct InconsistentCumulative : Error {
    using Error::Error;
};
struct UnknownRequestIndex : Error {
    using Error::Error;
};
struct EmptyCorpus : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};

struct SegmentRow {
    int64_t id = 0;
    int64_t cumulative_position = 0;
    int64_t segment_size = 0;
    int64_t index = 0;
};

struct TapeRecord {
    std::string name;
    std::vector<SegmentRow> segments;
};

struct RequestRow {
    int64_t index = 0;
    int64_t nb_requests = 0;
};

struct RequestRecord {
    std::string name;
    std::vector<RequestRow> rows;
};

// Strict readers for the published text formats: comma-separated, no quoting,
// bit-exact lowercase headers, LF or CRLF line endings, no stray whitespace.
TapeRecord read_tape_file(const std::filesystem::path& path,
                          const std::string& name);
RequestRecord read_request_file(const std::filesystem::path& path,
                                const std::string& name);

void write_tape_file(const std::filesystem::path& path, const TapeRecord& tape);
void write_request_file(const std::filesystem::path& path,
                        const RequestRecord& req);

// Consecutive segments sharing an index form one file; merged indices must be
// 1..n_f left to right and cumulative positions must match the running sum of
// segment sizes (either edge convention, detected from the first row).
Instance to_instance(const TapeRecord& tape, const RequestRecord& req);

struct CorpusEntry {
    std::string name;
    Instance instance;
};

// Layout: root/list_of_tape.txt, root/tapes/NAME.txt, root/requests/NAME.txt.
std::vector<CorpusEntry> parse_corpus(const std::filesystem::path& root);

struct TapeStats {
    std::string name;
    int64_t n_f = 0;
    int64_t n_req = 0;
    int64_t n = 0;
    double mean_size = 0;  // bytes
    double size_cv = 0;    // population stddev / mean
};

struct IntAggregate {
    int64_t min = 0;
    int64_t max = 0;
    int64_t median = 0;  // lower median for even counts
    int64_t mean = 0;    // rounded half away from zero
};

struct RealAggregate {
    double min = 0;
    double max = 0;
    double median = 0;  // lower median for even counts
    double mean = 0;
};

struct CorpusStats {
    std::vector<TapeStats> per_tape;
    IntAggregate n_f;
    IntAggregate n_req;
    IntAggregate n;
    RealAggregate mean_size;
    RealAggregate size_cv;
};

CorpusStats corpus_stats(const std::vector<CorpusEntry>& entries);

struct Penalties {
    int64_t half = 0;
    int64_t full = 0;
};

// full = average file size over all files of all tapes, rounded half away
// from zero; half = full/2 with the same rounding.
Penalties derive_penalties(const std::vector<CorpusEntry>& entries);

}  // namespace ltsp
