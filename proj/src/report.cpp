#include "triconflict/report.hpp"

#include <sstream>

#include <json.hpp>

#include "triconflict/detail/mirror.hpp"
#include "triconflict/table_io.hpp"

namespace triconflict {

using detail::ids_of;
using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string> &v, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += v[i];
    }
    return out;
}

ordered_json meta_json(const TableMeta &m) {
    ordered_json j;
    j["path"] = m.path;
    j["fingerprint"] = m.fingerprint;
    j["agents"] = m.agents;
    j["issues"] = m.issues;
    return j;
}

std::string meta_markdown(const TableMeta &m) {
    return "- table: " + m.path + " (fingerprint `" + m.fingerprint + "`, " +
           std::to_string(m.agents) + " agents x " + std::to_string(m.issues) +
           " issues)\n";
}

ordered_json model_json(const ModelSpec &m) {
    ordered_json j;
    j["family"] = std::string(to_string(m.family));
    j["universe"] = std::string(to_string(m.universe));
    if (m.pair)
        j["pair"] = std::string(to_string(*m.pair));
    if (m.thresholds) {
        j["thresholds"] = {{"alpha", to_string(m.thresholds->alpha)},
                           {"beta", to_string(m.thresholds->beta)}};
    }
    if (m.family == ModelFamily::generic &&
        m.pair == EvaluationFamily::set_inclusion)
        j["rejection_reading"] = m.reading == RejectionReading::theorem_consistent
                                     ? "theorem-consistent"
                                     : "as-printed";
    return j;
}

std::string model_markdown(const ModelSpec &m) {
    std::string out = std::string(to_string(m.family));
    if (m.pair)
        out += std::string(" (") + std::string(to_string(*m.pair)) + ")";
    out += " over " + std::string(to_string(m.universe));
    if (m.thresholds)
        out += ", alpha=" + to_string(m.thresholds->alpha) +
               ", beta=" + to_string(m.thresholds->beta);
    if (m.family == ModelFamily::generic &&
        m.pair == EvaluationFamily::set_inclusion &&
        m.reading == RejectionReading::as_printed)
        out += ", as-printed rejection";
    return out;
}

ordered_json regions_json(const RegionIds &r) {
    ordered_json j;
    j["pos"] = r.pos;
    j["neg"] = r.neg;
    j["bnd"] = r.bnd;
    return j;
}

ordered_json histogram_json(const std::map<std::size_t, std::size_t> &h) {
    ordered_json j = ordered_json::object();
    for (const auto &[size, count] : h)
        j[std::to_string(size)] = count;
    return j;
}

const Thresholds &require_thresholds(const std::optional<ThresholdArgs> &th,
                                     const char *family) {
    if (!th)
        throw DomainError(std::string("--alpha and --beta are required for the ") +
                          family + " model");
    return th->values;
}

void reject_thresholds(const std::optional<ThresholdArgs> &th, const char *family) {
    if (th)
        throw DomainError(std::string("--alpha/--beta are not meaningful for the ") +
                          family + " model");
}

template <typename Side>
TrisectReport trisect_impl(const TableSource &src, const Side &side,
                           ModelFamily family,
                           const std::vector<std::string> &subject_ids,
                           const std::optional<ThresholdArgs> &thresholds,
                           RejectionReading reading) {
    using ElemDim = typename Side::ElemDim;
    const auto subject = side.subject_from_ids(subject_ids);

    std::optional<Trisection<ElemDim, typename Side::SubjDim>> tri;
    std::optional<TwoWaySplit<ElemDim>> acc, rej;
    bool degree_pair = false;

    switch (family) {
    case ModelFamily::smz:
        reject_thresholds(thresholds, "smz");
        tri.emplace(side.smz(subject));
        acc.emplace(side.accept_bool(subject));
        rej.emplace(side.reject_bool(subject));
        break;
    case ModelFamily::fqw: {
        const Thresholds &th = require_thresholds(thresholds, "fqw");
        tri.emplace(side.fqw(subject, th));
        acc.emplace(side.accept_degree(subject, th));
        rej.emplace(side.reject_degree(subject, th));
        degree_pair = true;
        break;
    }
    case ModelFamily::generic:
        if (thresholds) {
            tri.emplace(side.generic_degree(subject, thresholds->values));
            acc.emplace(side.accept_degree(subject, thresholds->values));
            rej.emplace(side.reject_degree(subject, thresholds->values));
            degree_pair = true;
        } else {
            tri.emplace(side.generic_bool(subject, reading));
            acc.emplace(side.accept_bool(subject));
            rej.emplace(side.reject_bool(subject, reading));
        }
        break;
    case ModelFamily::probabilistic:
        throw DomainError("unknown model");
    }

    TrisectReport report;
    report.table = src.meta();
    report.model = tri->model();
    report.subject = ids_of(subject, side.subj_names());
    for (std::size_t i = 0; i < side.elem_count(); ++i)
        report.assignment.emplace_back(side.elem_names()[i],
                                       tri->pos().test(i)   ? "pos"
                                       : tri->neg().test(i) ? "neg"
                                                            : "bnd");
    report.regions = {ids_of(tri->pos(), side.elem_names()),
                      ids_of(tri->neg(), side.elem_names()),
                      ids_of(tri->bnd(), side.elem_names())};
    report.acc_and_rej = ids_of(acc->in() & rej->in(), side.elem_names());
    report.acc_only = ids_of(acc->in() & rej->out(), side.elem_names());
    report.rej_only = ids_of(acc->out() & rej->in(), side.elem_names());
    report.neither = ids_of(acc->out() & rej->out(), side.elem_names());
    if (degree_pair) {
        for (std::size_t i = 0; i < side.elem_count(); ++i)
            report.degrees.push_back({side.elem_names()[i],
                                      to_string(side.accept_value(i, subject)),
                                      to_string(side.reject_value(i, subject))});
    }
    return report;
}

template <typename Side>
SweepReport sweep_impl(const TableSource &src, const Side &side,
                       ModelFamily family,
                       const std::optional<ThresholdArgs> &thresholds) {
    SweepReport report;
    report.table = src.meta();

    bool degree_pair = false;
    switch (family) {
    case ModelFamily::smz:
        reject_thresholds(thresholds, "smz");
        report.model = ModelSpec::smz(Side::universe);
        break;
    case ModelFamily::fqw:
        report.model = ModelSpec::fqw(Side::universe,
                                      require_thresholds(thresholds, "fqw"));
        degree_pair = true;
        break;
    case ModelFamily::generic:
        if (thresholds) {
            report.model = ModelSpec::generic_degree(Side::universe, thresholds->values);
            degree_pair = true;
        } else {
            report.model = ModelSpec::generic_inclusion(Side::universe);
        }
        break;
    case ModelFamily::probabilistic:
        throw DomainError("unknown model");
    }

    for_each_subset<typename Side::SubjDim>(
        side.subj_width(), [&](const ElementSet<typename Side::SubjDim> &subject) {
            if (degree_pair && subject.empty())
                return;
            std::optional<Trisection<typename Side::ElemDim, typename Side::SubjDim>> tri;
            switch (family) {
            case ModelFamily::smz:
                tri.emplace(side.smz(subject));
                break;
            case ModelFamily::fqw:
                tri.emplace(side.fqw(subject, thresholds->values));
                break;
            case ModelFamily::generic:
                if (degree_pair)
                    tri.emplace(side.generic_degree(subject, thresholds->values));
                else
                    tri.emplace(side.generic_bool(subject));
                break;
            case ModelFamily::probabilistic:
                return;
            }
            SweepReport::Row row;
            row.subject = ids_of(subject, side.subj_names());
            row.regions = {ids_of(tri->pos(), side.elem_names()),
                           ids_of(tri->neg(), side.elem_names()),
                           ids_of(tri->bnd(), side.elem_names())};
            report.rows.push_back(std::move(row));
            ++report.pos_sizes[tri->pos().count()];
            ++report.neg_sizes[tri->neg().count()];
            ++report.bnd_sizes[tri->bnd().count()];
        });
    return report;
}

template <typename Side>
CompareReport compare_impl(const TableSource &src, const Side &side,
                           const std::vector<std::string> &subject_ids,
                           const ThresholdArgs &thresholds) {
    const auto subject = side.subject_from_ids(subject_ids);
    const auto s = side.smz(subject);
    const auto f = side.fqw(subject, thresholds.values);

    CompareReport report{src.meta(),
                         Side::universe,
                         ids_of(subject, side.subj_names()),
                         thresholds,
                         {},
                         {},
                         {},
                         {},
                         {}};
    report.smz = {ids_of(s.pos(), side.elem_names()),
                  ids_of(s.neg(), side.elem_names()),
                  ids_of(s.bnd(), side.elem_names())};
    report.fqw = {ids_of(f.pos(), side.elem_names()),
                  ids_of(f.neg(), side.elem_names()),
                  ids_of(f.bnd(), side.elem_names())};
    const auto diff = [&](const auto &a, const auto &b) {
        return CompareReport::Disagreement{ids_of(a - b, side.elem_names()),
                                           ids_of(b - a, side.elem_names())};
    };
    report.pos = diff(s.pos(), f.pos());
    report.neg = diff(s.neg(), f.neg());
    report.bnd = diff(s.bnd(), f.bnd());
    return report;
}

} // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "markdown")
        return OutputFormat::markdown;
    return std::nullopt;
}

std::string fingerprint(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[i] = digits[h & 15];
    return out;
}

TableMeta TableSource::meta() const {
    return {path.string(), triconflict::fingerprint(bytes), table.agent_count(),
            table.issue_count()};
}

TableSource load_table_source(const std::filesystem::path &path) {
    std::string bytes = read_file(path);
    TableFormat format =
        path.extension() == ".json" ? TableFormat::json : TableFormat::csv;
    SituationTable table = parse_table(bytes, format);
    return {path, std::move(bytes), std::move(table)};
}

TrisectReport cmd_trisect(const TableSource &src, UniverseKind universe,
                          ModelFamily family,
                          const std::vector<std::string> &subject_ids,
                          const std::optional<ThresholdArgs> &thresholds,
                          RejectionReading reading) {
    if (universe == UniverseKind::agents)
        return trisect_impl(src, detail::AgentSide{src.table}, family,
                            subject_ids, thresholds, reading);
    return trisect_impl(src, detail::IssueSide{src.table}, family, subject_ids,
                        thresholds, reading);
}

SweepReport cmd_sweep(const TableSource &src, UniverseKind universe,
                      ModelFamily family,
                      const std::optional<ThresholdArgs> &thresholds) {
    if (universe == UniverseKind::agents)
        return sweep_impl(src, detail::AgentSide{src.table}, family, thresholds);
    return sweep_impl(src, detail::IssueSide{src.table}, family, thresholds);
}

AuditReport cmd_audit(const TableSource &src, AuditProperty property,
                      const std::optional<ThresholdArgs> &thresholds) {
    const ThresholdArgs used = thresholds.value_or(
        ThresholdArgs{"0.5", "0.5", Thresholds(Rational(1, 2), Rational(1, 2))});
    const bool uses_thresholds = property == AuditProperty::partition ||
                                 property == AuditProperty::compose ||
                                 property == AuditProperty::reduce_fqw;
    AuditResult result = run_audit(src.table, property, used.values);

    AuditReport report;
    report.table = src.meta();
    report.property = property;
    if (uses_thresholds)
        report.thresholds = used;
    report.subjects_checked = result.subjects_checked;
    report.counterexamples = std::move(result.counterexamples);
    report.rerun = "triconflict audit --table " + src.path.string() +
                   " --property " + std::string(to_string(property));
    if (uses_thresholds)
        report.rerun += " --alpha " + used.alpha_text + " --beta " + used.beta_text;
    return report;
}

CompareReport cmd_compare(const TableSource &src, UniverseKind universe,
                          const std::vector<std::string> &subject_ids,
                          const ThresholdArgs &thresholds) {
    if (universe == UniverseKind::agents)
        return compare_impl(src, detail::AgentSide{src.table}, subject_ids,
                            thresholds);
    return compare_impl(src, detail::IssueSide{src.table}, subject_ids,
                        thresholds);
}

std::string TrisectReport::render(OutputFormat format) const {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["command"] = "trisect";
        j["table"] = meta_json(table);
        j["model"] = model_json(model);
        j["subject"] = subject;
        j["regions"] = regions_json(regions);
        if (!degrees.empty()) {
            auto rows = ordered_json::array();
            for (const auto &d : degrees)
                rows.push_back({{"id", d.id}, {"accept", d.accept}, {"reject", d.reject}});
            j["evaluations"] = std::move(rows);
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "element,region\n";
        for (const auto &[id, region] : assignment)
            out << id << ',' << region << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "# trisect — " << model_markdown(model) << "\n\n";
    out << meta_markdown(table);
    out << "- subject: {" << join(subject, ", ") << "}\n\n";
    out << "| region | elements |\n| --- | --- |\n";
    out << "| pos | " << join(regions.pos, ", ") << " |\n";
    out << "| neg | " << join(regions.neg, ", ") << " |\n";
    out << "| bnd | " << join(regions.bnd, ", ") << " |\n\n";
    out << "| accept \\ reject | rejected | not rejected |\n| --- | --- | --- |\n";
    out << "| accepted | " << join(acc_and_rej, ", ") << " (bnd) | "
        << join(acc_only, ", ") << " (pos) |\n";
    out << "| not accepted | " << join(rej_only, ", ") << " (neg) | "
        << join(neither, ", ") << " (bnd) |\n";
    if (!degrees.empty()) {
        out << "\n| element | accept | reject |\n| --- | --- | --- |\n";
        for (const auto &d : degrees)
            out << "| " << d.id << " | " << d.accept << " | " << d.reject << " |\n";
    }
    return out.str();
}

std::string SweepReport::render(OutputFormat format) const {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["command"] = "sweep";
        j["table"] = meta_json(table);
        j["model"] = model_json(model);
        j["subjects"] = rows.size();
        auto arr = ordered_json::array();
        for (const auto &row : rows) {
            ordered_json r;
            r["subject"] = row.subject;
            r["pos"] = row.regions.pos;
            r["neg"] = row.regions.neg;
            r["bnd"] = row.regions.bnd;
            arr.push_back(std::move(r));
        }
        j["trisections"] = std::move(arr);
        j["histograms"] = {{"pos", histogram_json(pos_sizes)},
                           {"neg", histogram_json(neg_sizes)},
                           {"bnd", histogram_json(bnd_sizes)}};
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "subject,pos,neg,bnd\n";
        for (const auto &row : rows)
            out << join(row.subject, ";") << ',' << join(row.regions.pos, ";")
                << ',' << join(row.regions.neg, ";") << ','
                << join(row.regions.bnd, ";") << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "# sweep — " << model_markdown(model) << "\n\n";
    out << meta_markdown(table);
    out << "- subjects: " << rows.size() << "\n\n";
    out << "| subject | pos | neg | bnd |\n| --- | --- | --- | --- |\n";
    for (const auto &row : rows)
        out << "| {" << join(row.subject, ", ") << "} | "
            << join(row.regions.pos, ", ") << " | " << join(row.regions.neg, ", ")
            << " | " << join(row.regions.bnd, ", ") << " |\n";
    const auto histogram = [&](const char *name,
                               const std::map<std::size_t, std::size_t> &h) {
        out << "\n| " << name << " size | subjects |\n| --- | --- |\n";
        for (const auto &[size, count] : h)
            out << "| " << size << " | " << count << " |\n";
    };
    histogram("pos", pos_sizes);
    histogram("neg", neg_sizes);
    histogram("bnd", bnd_sizes);
    return out.str();
}

std::string AuditReport::render(OutputFormat format) const {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["command"] = "audit";
        j["table"] = meta_json(table);
        j["property"] = std::string(to_string(property));
        if (thresholds)
            j["thresholds"] = {{"alpha", to_string(thresholds->values.alpha)},
                               {"beta", to_string(thresholds->values.beta)}};
        j["subjects_checked"] = subjects_checked;
        j["passed"] = passed();
        auto arr = ordered_json::array();
        for (const auto &ce : counterexamples)
            arr.push_back({{"subject", ce.subject}, {"detail", ce.detail}});
        j["counterexamples"] = std::move(arr);
        j["rerun"] = rerun;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "subject,detail\n";
        for (const auto &ce : counterexamples) {
            std::string detail = ce.detail;
            for (auto &c : detail)
                if (c == ',')
                    c = ';';
            std::string subject = ce.subject;
            for (auto &c : subject)
                if (c == ',')
                    c = ';';
            out << subject << ',' << detail << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    out << "# audit " << to_string(property) << " — "
        << (passed() ? "pass" : "FAIL") << "\n\n";
    out << meta_markdown(table);
    if (thresholds)
        out << "- thresholds: alpha=" << to_string(thresholds->values.alpha)
            << ", beta=" << to_string(thresholds->values.beta) << "\n";
    out << "- subjects checked: " << subjects_checked << "\n";
    out << "- rerun: `" << rerun << "`\n";
    if (!counterexamples.empty()) {
        out << "\n| subject | detail |\n| --- | --- |\n";
        for (const auto &ce : counterexamples)
            out << "| " << ce.subject << " | " << ce.detail << " |\n";
    }
    return out.str();
}

std::string CompareReport::render(OutputFormat format) const {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["command"] = "compare";
        j["table"] = meta_json(table);
        j["universe"] = std::string(to_string(universe));
        j["subject"] = subject;
        j["thresholds"] = {{"alpha", to_string(thresholds.values.alpha)},
                           {"beta", to_string(thresholds.values.beta)}};
        j["smz"] = regions_json(smz);
        j["fqw"] = regions_json(fqw);
        const auto disagreement = [](const Disagreement &d) {
            ordered_json x;
            x["only_smz"] = d.only_smz;
            x["only_fqw"] = d.only_fqw;
            return x;
        };
        j["region_differences"] = {{"pos", disagreement(pos)},
                                   {"neg", disagreement(neg)},
                                   {"bnd", disagreement(bnd)}};
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "region,smz,fqw,only_smz,only_fqw\n";
        const auto row = [&](const char *name, const std::vector<std::string> &a,
                             const std::vector<std::string> &b,
                             const Disagreement &d) {
            out << name << ',' << join(a, ";") << ',' << join(b, ";") << ','
                << join(d.only_smz, ";") << ',' << join(d.only_fqw, ";") << '\n';
        };
        row("pos", smz.pos, fqw.pos, pos);
        row("neg", smz.neg, fqw.neg, neg);
        row("bnd", smz.bnd, fqw.bnd, bnd);
        return out.str();
    }
    std::ostringstream out;
    out << "# compare — smz vs fqw over " << to_string(universe) << "\n\n";
    out << meta_markdown(table);
    out << "- subject: {" << join(subject, ", ") << "}\n";
    out << "- thresholds: alpha=" << to_string(thresholds.values.alpha)
        << ", beta=" << to_string(thresholds.values.beta) << "\n\n";
    out << "| region | smz | fqw | only smz | only fqw |\n"
        << "| --- | --- | --- | --- | --- |\n";
    const auto row = [&](const char *name, const std::vector<std::string> &a,
                         const std::vector<std::string> &b, const Disagreement &d) {
        out << "| " << name << " | " << join(a, ", ") << " | " << join(b, ", ")
            << " | " << join(d.only_smz, ", ") << " | " << join(d.only_fqw, ", ")
            << " |\n";
    };
    row("pos", smz.pos, fqw.pos, pos);
    row("neg", smz.neg, fqw.neg, neg);
    row("bnd", smz.bnd, fqw.bnd, bnd);
    return out.str();
}

} // namespace triconflict
