#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triconflict/audit.hpp"

namespace triconflict {

enum class OutputFormat { json, csv, markdown };
std::optional<OutputFormat> parse_output_format(std::string_view name);

//! 64-bit FNV-1a over the raw bytes, as 16 lowercase hex digits.
std::string fingerprint(std::string_view bytes);

struct TableMeta {
    std::string path;
    std::string fingerprint;
    std::size_t agents = 0;
    std::size_t issues = 0;
};

//! A table together with where it came from, so reports can carry the
//! source path and a fingerprint of the exact bytes that were parsed.
struct TableSource {
    std::filesystem::path path;
    std::string bytes;
    SituationTable table;

    TableMeta meta() const;
};

TableSource load_table_source(const std::filesystem::path &path);

//! Thresholds as given on the command line, kept verbatim so reports can
//! echo a re-runnable command, plus their exact parsed values.
struct ThresholdArgs {
    std::string alpha_text;
    std::string beta_text;
    Thresholds values;
};

struct RegionIds {
    std::vector<std::string> pos, neg, bnd;
};

struct TrisectReport {
    TableMeta table;
    ModelSpec model;
    std::vector<std::string> subject;
    //! Every element of the trisected universe, in universe order, paired
    //! with the region it landed in ("pos", "neg" or "bnd").
    std::vector<std::pair<std::string, std::string>> assignment;
    RegionIds regions;
    //! Cross-tab occupancy: which elements each (acceptance, rejection)
    //! verdict combination captures. pos = acc_only, neg = rej_only,
    //! bnd = acc_and_rej ∪ neither.
    std::vector<std::string> acc_and_rej, acc_only, rej_only, neither;
    //! Exact degree per element for the degree models, empty otherwise.
    struct DegreeRow {
        std::string id, accept, reject;
    };
    std::vector<DegreeRow> degrees;

    std::string render(OutputFormat format) const;
};

struct SweepReport {
    TableMeta table;
    ModelSpec model;
    struct Row {
        std::vector<std::string> subject;
        RegionIds regions;
    };
    std::vector<Row> rows;
    //! Region size -> number of subjects with that region size.
    std::map<std::size_t, std::size_t> pos_sizes, neg_sizes, bnd_sizes;

    std::string render(OutputFormat format) const;
};

struct AuditReport {
    TableMeta table;
    AuditProperty property;
    std::optional<ThresholdArgs> thresholds; //!< present when the property used them
    std::size_t subjects_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::string rerun; //!< command line reproducing this audit

    bool passed() const { return counterexamples.empty(); }
    std::string render(OutputFormat format) const;
};

struct CompareReport {
    TableMeta table;
    UniverseKind universe;
    std::vector<std::string> subject;
    ThresholdArgs thresholds;
    RegionIds smz, fqw;
    //! Per region: elements only one of the two models places there.
    struct Disagreement {
        std::vector<std::string> only_smz, only_fqw;
    };
    Disagreement pos, neg, bnd;

    std::string render(OutputFormat format) const;
};

//! The four commands. Thresholds are required by fqw (and select the degree
//! pair for generic); they are rejected for smz. Unknown subject ids raise
//! UnknownIdError; empty subjects under a degree model raise DomainError.
TrisectReport cmd_trisect(const TableSource &src, UniverseKind universe,
                          ModelFamily family,
                          const std::vector<std::string> &subject_ids,
                          const std::optional<ThresholdArgs> &thresholds,
                          RejectionReading reading = RejectionReading::theorem_consistent);

SweepReport cmd_sweep(const TableSource &src, UniverseKind universe,
                      ModelFamily family,
                      const std::optional<ThresholdArgs> &thresholds);

//! Audits default alpha and beta to 1/2 when not given; the qualitative
//! properties ignore thresholds entirely.
AuditReport cmd_audit(const TableSource &src, AuditProperty property,
                      const std::optional<ThresholdArgs> &thresholds);

CompareReport cmd_compare(const TableSource &src, UniverseKind universe,
                          const std::vector<std::string> &subject_ids,
                          const ThresholdArgs &thresholds);

} // namespace triconflict
