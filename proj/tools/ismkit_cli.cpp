// Command-line front end for the ISM/MICMAC toolkit.
//
// Exit codes: 0 success, 2 parse error (unreadable or malformed input),
// 3 validation error (well-formed input breaking a domain rule), 4 bad
// parameter (nonsense flag values, impossible output locations).

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ismkit/audit.hpp"
#include "ismkit/dot_export.hpp"
#include "ismkit/error.hpp"
#include "ismkit/factor.hpp"
#include "ismkit/ism.hpp"
#include "ismkit/micmac.hpp"
#include "ismkit/report_json.hpp"
#include "ismkit/ssim.hpp"
#include "ismkit/survey.hpp"
#include "ismkit/svg_chart.hpp"

namespace fs = std::filesystem;
using namespace ismkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBadParameter = 4;

// Raised for flag combinations and values the parser cannot catch.
struct BadParameter : std::runtime_error {
    explicit BadParameter(const std::string& message) : std::runtime_error(message) {}
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw BadParameter("cannot create directory " + path.parent_path().string() + ": " +
                               ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw BadParameter("cannot write " + path.string());
    out << content;
    if (!out)
        throw BadParameter("short write to " + path.string());
}

fs::path bundled_data_dir() {
    if (const char* env = std::getenv("ISMKIT_DATA_DIR"))
        return env;
    return ISMKIT_BUNDLED_DATA_DIR;
}

// --out beats the ISMKIT_OUT_DIR environment variable beats ".".
fs::path resolve_out_dir(const std::string& flag) {
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("ISMKIT_OUT_DIR"))
        return env;
    return ".";
}

struct FormatSelection {
    bool json = true;
    bool dot = true;
    bool svg = true;
};

FormatSelection resolve_formats(const std::vector<std::string>& flags) {
    if (flags.empty())
        return {};
    FormatSelection selection{false, false, false};
    for (const auto& flag : flags) {
        if (flag == "json")
            selection.json = true;
        else if (flag == "dot")
            selection.dot = true;
        else if (flag == "svg")
            selection.svg = true;
        else
            throw BadParameter("unknown --format \"" + flag + "\" (expected json, dot or svg)");
    }
    return selection;
}

// Options shared by the subcommands that consume an SSIM file.
struct SsimInput {
    std::string ssim_path;
    std::string catalog_path;
    bool paper_corpus = false;
};

void add_ssim_options(CLI::App* cmd, SsimInput& input) {
    cmd->add_option("--ssim", input.ssim_path, "SSIM judgment matrix (CSV)");
    cmd->add_option("--catalog", input.catalog_path, "factor catalog (JSON)");
    cmd->add_flag("--paper-corpus", input.paper_corpus,
                  "use the bundled 17-principle corpus (SSIM + catalog)");
}

struct LoadedSsim {
    SsimMatrix matrix;
    std::optional<FactorCatalog> catalog;
};

LoadedSsim load_ssim(const SsimInput& input) {
    fs::path ssim_path;
    fs::path catalog_path;
    if (input.paper_corpus) {
        ssim_path = bundled_data_dir() / "corpus" / "ssim.csv";
        catalog_path = bundled_data_dir() / "corpus" / "catalog.json";
    }
    if (!input.ssim_path.empty())
        ssim_path = input.ssim_path;
    if (!input.catalog_path.empty())
        catalog_path = input.catalog_path;
    if (ssim_path.empty())
        throw BadParameter("no input: give --ssim FILE or --paper-corpus");

    std::optional<FactorCatalog> catalog;
    if (!catalog_path.empty())
        catalog = parse_catalog(read_file(catalog_path));
    SsimMatrix matrix = parse_ssim(read_file(ssim_path), catalog ? &*catalog : nullptr);
    return {std::move(matrix), std::move(catalog)};
}

std::string level_table_text(const LevelPartition& partition, const FactorCatalog* catalog) {
    std::string out = "level  factors\n";
    for (std::size_t level = 1; level <= partition.level_count(); ++level) {
        std::string line = std::to_string(level);
        line.append(line.size() < 5 ? 5 - line.size() : 1, ' ');
        line += "  ";
        bool first = true;
        for (const auto& id : partition.level(level)) {
            if (!first)
                line += ", ";
            first = false;
            line += id;
            if (catalog) {
                if (const Factor* factor = catalog->find(id))
                    line += " (" + factor->short_name + ")";
            }
        }
        out += line + "\n";
    }
    return out;
}

int cmd_ism(const SsimInput& input, const std::string& out_flag,
            const std::vector<std::string>& format_flags) {
    FormatSelection formats = resolve_formats(format_flags);
    LoadedSsim loaded = load_ssim(input);
    IsmReport report = run_ism(loaded.matrix);

    fs::path out = resolve_out_dir(out_flag);
    if (formats.json)
        write_file(out / "report.json", ism_report_json(report));
    if (formats.dot)
        write_file(out / "digraph.dot",
                   digraph_dot(report.digraph, loaded.catalog ? &*loaded.catalog : nullptr));
    write_file(out / "levels.txt",
               level_table_text(report.levels, loaded.catalog ? &*loaded.catalog : nullptr));

    std::cout << report.closed.size() << " factors, " << report.levels.level_count()
              << " levels, " << report.digraph.edges.size() << " digraph edges\n"
              << "outputs in " << out.string() << "\n";
    return kExitOk;
}

int cmd_micmac(const SsimInput& input, const std::string& out_flag,
               const std::vector<std::string>& format_flags,
               std::optional<double> driving_cutoff, std::optional<double> dependence_cutoff) {
    FormatSelection formats = resolve_formats(format_flags);
    LoadedSsim loaded = load_ssim(input);

    const std::size_t n = loaded.matrix.size();
    MicmacThresholds thresholds = auto_thresholds(n);
    if (driving_cutoff)
        thresholds.driving = *driving_cutoff;
    if (dependence_cutoff)
        thresholds.dependence = *dependence_cutoff;
    if (thresholds.driving <= 0.0 || thresholds.dependence <= 0.0)
        throw BadParameter("cutoffs must be positive (got driving " +
                           std::to_string(thresholds.driving) + ", dependence " +
                           std::to_string(thresholds.dependence) + ")");
    if (n == 1)
        std::cerr << "warning: a single factor makes the quadrant analysis degenerate\n";

    PowerProfile powers = power_profile(transitive_closure(to_initial_reachability(loaded.matrix)));
    MicmacClassification classification = classify_micmac(powers, thresholds);
    QuadrantChart chart = chart_data(classification);

    fs::path out = resolve_out_dir(out_flag);
    if (formats.json)
        write_file(out / "micmac.json", micmac_json(classification, chart));
    if (formats.svg)
        write_file(out / "micmac.svg", micmac_svg(chart));

    std::cout << classification.points.size() << " classified points (driving cutoff "
              << thresholds.driving << ", dependence cutoff " << thresholds.dependence << ")\n"
              << "outputs in " << out.string() << "\n";
    return kExitOk;
}

int cmd_audit(const SsimInput& input, const std::string& out_flag, std::string matrix_ref,
              std::string clusters_ref, std::string levels_ref,
              std::optional<double> driving_cutoff, std::optional<double> dependence_cutoff) {
    if (input.paper_corpus) {
        fs::path corpus = bundled_data_dir() / "corpus";
        if (matrix_ref.empty())
            matrix_ref = (corpus / "reachability.reference.json").string();
        if (clusters_ref.empty())
            clusters_ref = (corpus / "clusters.reference.json").string();
        if (levels_ref.empty())
            levels_ref = (corpus / "levels.reference.json").string();
    }
    if (matrix_ref.empty() && clusters_ref.empty() && levels_ref.empty())
        throw BadParameter("nothing to audit: give --matrix-reference, --clusters-reference, "
                           "--levels-reference or --paper-corpus");

    LoadedSsim loaded = load_ssim(input);
    ReachabilityMatrix closed = transitive_closure(to_initial_reachability(loaded.matrix));
    fs::path out = resolve_out_dir(out_flag);

    if (!matrix_ref.empty()) {
        ReferenceMatrix reference = parse_reference_matrix(read_file(matrix_ref));
        MatrixDiff diff = compare_matrices(closed, reference);
        write_file(out / "matrix_audit.json", matrix_diff_json(diff));
        std::cout << "matrix audit: " << diff.cell_diffs.size() << " cell diffs, "
                  << diff.origin_diffs.size() << " origin diffs, " << diff.arithmetic_flags.size()
                  << " arithmetic flags, " << diff.rank_diffs.size() << " rank diffs\n";
    }

    if (!clusters_ref.empty()) {
        MicmacThresholds thresholds = auto_thresholds(closed.size());
        if (driving_cutoff)
            thresholds.driving = *driving_cutoff;
        if (dependence_cutoff)
            thresholds.dependence = *dependence_cutoff;
        if (thresholds.driving <= 0.0 || thresholds.dependence <= 0.0)
            throw BadParameter("cutoffs must be positive");
        MicmacClassification classification =
            classify_micmac(power_profile(closed), thresholds);
        ClusterReference reference = parse_cluster_reference(read_file(clusters_ref));
        ClusterDiff diff = compare_clusters(classification, reference);
        write_file(out / "cluster_audit.json", cluster_diff_json(diff));
        std::cout << "cluster audit: " << diff.agreements << " of " << diff.entries.size()
                  << " factors agree\n";
    }

    if (!levels_ref.empty()) {
        LevelPartition partition = partition_levels(closed);
        LevelReference reference = parse_level_reference(read_file(levels_ref));
        LevelsDiff diff = compare_levels(partition, reference);
        write_file(out / "levels_audit.json", levels_diff_json(diff));
        std::cout << "level audit: " << diff.agreements << " of " << diff.entries.size()
                  << " claims agree; top level "
                  << (diff.top_matches ? "matches" : "does not match") << "\n";
    }

    std::cout << "outputs in " << out.string() << "\n";
    return kExitOk;
}

int cmd_survey(const std::string& responses_path, const std::string& catalog_path,
               const std::vector<std::string>& group_flags,
               const std::vector<std::string>& breakdown_flags, const std::string& out_flag) {
    SurveyData data = parse_survey_csv(read_file(responses_path));

    std::optional<FactorCatalog> catalog;
    if (!catalog_path.empty())
        catalog = parse_catalog(read_file(catalog_path));

    std::optional<std::vector<std::string>> expected;
    if (catalog) {
        expected.emplace();
        for (const auto& factor : catalog->factors())
            expected->push_back(factor.id);
    }
    FrequencyTable table = aggregate_frequencies(data, expected ? &*expected : nullptr);

    auto kind_items = [&](FactorKind kind) {
        std::vector<std::string> ids;
        for (const auto& factor : catalog->of_kind(kind))
            ids.push_back(factor.id);
        return ids;
    };

    std::map<std::string, SurveyGroupResult> groups;
    for (const auto& flag : group_flags) {
        std::string name = flag;
        std::vector<std::string> items;
        if (flag == "motivators" || flag == "demotivators" || flag == "principles") {
            if (!catalog)
                throw BadParameter("--group " + flag + " needs --catalog");
            items = kind_items(flag == "motivators"    ? FactorKind::Motivator
                               : flag == "demotivators" ? FactorKind::Demotivator
                                                        : FactorKind::Principle);
        } else if (auto eq = flag.find('='); eq != std::string::npos) {
            name = flag.substr(0, eq);
            std::string rest = flag.substr(eq + 1);
            std::stringstream stream(rest);
            std::string id;
            while (std::getline(stream, id, ','))
                if (!id.empty()) items.push_back(id);
            if (name.empty() || items.empty())
                throw BadParameter("bad --group \"" + flag + "\", expected NAME=ID1,ID2,...");
        } else {
            throw BadParameter("bad --group \"" + flag +
                               "\": use motivators/demotivators/principles or NAME=ID1,ID2,...");
        }
        SurveyGroupResult group;
        group.item_ids = std::move(items);
        group.average_agree_pct = group_average_agree(table, group.item_ids);
        group.display = display_percent(group.average_agree_pct);
        groups[name] = std::move(group);
    }

    std::map<std::string, std::vector<BreakdownCategory>> breakdowns;
    for (const auto& column : breakdown_flags)
        breakdowns[column] = breakdown_by(data, column);

    fs::path out = resolve_out_dir(out_flag);
    write_file(out / "survey.json", survey_json(table, groups, breakdowns));

    std::cout << "item        n  agree%  neutral%  disagree%\n";
    for (const auto& row : table.rows) {
        std::string id = row.item_id;
        if (id.size() < 10)
            id.append(10 - id.size(), ' ');
        std::cout << id << ' ' << row.n << "  " << row.agree_display << "  " << row.neutral_display
                  << "  " << row.disagree_display << "\n";
    }
    for (const auto& [name, group] : groups)
        std::cout << "group " << name << ": " << group.display << "% agree over "
                  << group.item_ids.size() << " items\n";
    for (const auto& warning : table.warnings)
        std::cerr << "warning: " << warning << "\n";
    std::cout << "outputs in " << out.string() << "\n";
    return kExitOk;
}

int cmd_taxonomy(const std::string& catalog_path, const std::string& mapping_path, bool want_dot,
                 const std::string& out_flag) {
    FactorCatalog catalog = parse_catalog(read_file(catalog_path));
    std::cout << catalog.count(FactorKind::Motivator) << " motivators, "
              << catalog.count(FactorKind::Demotivator) << " demotivators, "
              << catalog.count(FactorKind::Principle) << " principles\n";

    if (mapping_path.empty()) {
        if (want_dot)
            throw BadParameter("--dot needs --mapping");
        return kExitOk;
    }

    TaxonomyMapping mapping = parse_mapping(read_file(mapping_path));
    std::vector<MappingIssue> issues = validate_mapping(mapping, catalog);
    if (!issues.empty()) {
        for (const auto& issue : issues)
            std::cerr << "mapping edge " << issue.edge_index << " (" << issue.source << " -> "
                      << issue.target << "): " << issue.problem << "\n";
        return kExitValidation;
    }
    std::cout << "mapping: " << mapping.edges.size() << " edges, consistent\n";

    if (want_dot) {
        fs::path out = resolve_out_dir(out_flag);
        write_file(out / "taxonomy.dot", mapping_dot(mapping, catalog));
        std::cout << "outputs in " << out.string() << "\n";
    }
    return kExitOk;
}

std::optional<RelationSymbol> read_symbol_line(std::istream& in, std::ostream& prompt_out,
                                               const std::string& prompt) {
    while (true) {
        prompt_out << prompt << std::flush;
        std::string line;
        if (!std::getline(in, line))
            return std::nullopt;  // end of input
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.size() == 1) {
            switch (std::toupper(static_cast<unsigned char>(trimmed[0]))) {
            case 'V': return RelationSymbol::V;
            case 'A': return RelationSymbol::A;
            case 'X': return RelationSymbol::X;
            case 'O': return RelationSymbol::O;
            default: break;
            }
        }
        prompt_out << "please answer V, A, X or O\n";
    }
}

int cmd_elicit(const std::string& factors_flag, const std::string& catalog_path,
               const std::string& kind_flag, std::string output_path, bool resume,
               const std::string& out_flag) {
    std::vector<std::string> ids;
    std::optional<FactorCatalog> catalog;
    if (!catalog_path.empty()) {
        catalog = parse_catalog(read_file(catalog_path));
        FactorKind kind;
        if (kind_flag == "motivator")
            kind = FactorKind::Motivator;
        else if (kind_flag == "demotivator")
            kind = FactorKind::Demotivator;
        else if (kind_flag == "principle" || kind_flag.empty())
            kind = FactorKind::Principle;
        else
            throw BadParameter("unknown --kind \"" + kind_flag +
                               "\" (expected motivator, demotivator or principle)");
        for (const auto& factor : catalog->of_kind(kind))
            ids.push_back(factor.id);
    } else if (!factors_flag.empty()) {
        std::stringstream stream(factors_flag);
        std::string id;
        while (std::getline(stream, id, ','))
            if (!id.empty()) ids.push_back(id);
    }
    if (ids.size() < 2)
        throw BadParameter("need at least two factors: give --factors A,B,... or --catalog FILE");

    if (output_path.empty())
        output_path = (resolve_out_dir(out_flag) / "ssim.csv").string();

    SsimDraft draft(ids);
    if (resume && fs::exists(output_path)) {
        draft = parse_ssim_draft(read_file(output_path), catalog ? &*catalog : nullptr);
        if (draft.factor_ids() != ids)
            throw ValidationError("resume file " + output_path +
                                  " covers a different factor list");
    }

    const auto pairs = elicit_pairs(ids.size());
    std::cout << draft.answered_count() << " of " << pairs.size() << " pairs answered, "
              << (pairs.size() - draft.answered_count()) << " remaining\n";

    for (auto [i, j] : pairs) {
        if (draft.symbol(i, j))
            continue;
        std::string prompt = ids[i] + " vs " + ids[j] + " [V/A/X/O]: ";
        std::optional<RelationSymbol> symbol = read_symbol_line(std::cin, std::cout, prompt);
        if (!symbol) {
            write_file(output_path, serialize_ssim(draft));
            std::cout << "\nend of input; saved partial matrix (" << draft.answered_count()
                      << " of " << pairs.size() << " pairs) to " << output_path << "\n";
            return kExitOk;
        }
        draft.set_symbol(i, j, *symbol);
    }

    write_file(output_path, serialize_ssim(draft.to_matrix()));
    std::cout << "wrote " << output_path << " (" << pairs.size() << " pairs)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpretive structural modeling toolkit"};
    app.require_subcommand(1);

    // ism
    SsimInput ism_input;
    std::string ism_out;
    std::vector<std::string> ism_formats;
    CLI::App* ism = app.add_subcommand("ism", "run the full pipeline and write report outputs");
    add_ssim_options(ism, ism_input);
    ism->add_option("--out", ism_out, "output directory (default $ISMKIT_OUT_DIR or .)");
    ism->add_option("--format", ism_formats, "restrict outputs: json, dot")->allow_extra_args(false);

    // micmac
    SsimInput micmac_input;
    std::string micmac_out;
    std::vector<std::string> micmac_formats;
    std::optional<double> micmac_driving, micmac_dependence;
    CLI::App* micmac = app.add_subcommand("micmac", "classify factors into the four quadrants");
    add_ssim_options(micmac, micmac_input);
    micmac->add_option("--out", micmac_out, "output directory (default $ISMKIT_OUT_DIR or .)");
    micmac->add_option("--format", micmac_formats, "restrict outputs: json, svg")
        ->allow_extra_args(false);
    micmac->add_option("--driving-cutoff", micmac_driving, "override the auto n/2 driving cutoff");
    micmac->add_option("--dependence-cutoff", micmac_dependence,
                       "override the auto n/2 dependence cutoff");

    // audit
    SsimInput audit_input;
    std::string audit_out, audit_matrix_ref, audit_clusters_ref, audit_levels_ref;
    std::optional<double> audit_driving, audit_dependence;
    CLI::App* audit = app.add_subcommand(
        "audit", "compare the computed pipeline against transcribed reference tables");
    add_ssim_options(audit, audit_input);
    audit->add_option("--out", audit_out, "output directory (default $ISMKIT_OUT_DIR or .)");
    audit->add_option("--matrix-reference", audit_matrix_ref,
                      "transcribed reachability matrix (JSON)");
    audit->add_option("--clusters-reference", audit_clusters_ref,
                      "published cluster lists (JSON)");
    audit->add_option("--levels-reference", audit_levels_ref, "published level claims (JSON)");
    audit->add_option("--driving-cutoff", audit_driving, "cluster audit driving cutoff");
    audit->add_option("--dependence-cutoff", audit_dependence, "cluster audit dependence cutoff");

    // survey
    std::string survey_responses, survey_catalog, survey_out;
    std::vector<std::string> survey_groups, survey_breakdowns;
    CLI::App* survey = app.add_subcommand("survey", "frequency analysis of Likert responses");
    survey->add_option("--responses", survey_responses, "response CSV")->required();
    survey->add_option("--catalog", survey_catalog, "factor catalog (JSON)");
    survey->add_option("--group", survey_groups,
                       "average a group: motivators, demotivators, principles or NAME=ID1,ID2,...")
        ->allow_extra_args(false);
    survey->add_option("--breakdown", survey_breakdowns, "demographic column to break down by")
        ->allow_extra_args(false);
    survey->add_option("--out", survey_out, "output directory (default $ISMKIT_OUT_DIR or .)");

    // taxonomy
    std::string taxonomy_catalog, taxonomy_mapping, taxonomy_out;
    bool taxonomy_dot = false;
    CLI::App* taxonomy =
        app.add_subcommand("taxonomy", "catalog summary and mapping validation");
    taxonomy->add_option("--catalog", taxonomy_catalog, "factor catalog (JSON)")->required();
    taxonomy->add_option("--mapping", taxonomy_mapping, "taxonomy mapping (JSON)");
    taxonomy->add_flag("--dot", taxonomy_dot, "export the bipartite mapping as DOT");
    taxonomy->add_option("--out", taxonomy_out, "output directory (default $ISMKIT_OUT_DIR or .)");

    // elicit
    std::string elicit_factors, elicit_catalog, elicit_kind, elicit_output, elicit_out;
    bool elicit_resume = false;
    CLI::App* elicit =
        app.add_subcommand("elicit", "interactively collect pairwise judgments into an SSIM file");
    elicit->add_option("--factors", elicit_factors, "comma-separated factor ids");
    elicit->add_option("--catalog", elicit_catalog, "factor catalog (JSON)");
    elicit->add_option("--kind", elicit_kind,
                       "catalog kind to elicit (default principle)");
    elicit->add_option("--output", elicit_output, "SSIM file to write (default OUT/ssim.csv)");
    elicit->add_flag("--resume", elicit_resume, "continue from an existing partial file");
    elicit->add_option("--out", elicit_out, "output directory (default $ISMKIT_OUT_DIR or .)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ism->parsed())
            return cmd_ism(ism_input, ism_out, ism_formats);
        if (micmac->parsed())
            return cmd_micmac(micmac_input, micmac_out, micmac_formats, micmac_driving,
                              micmac_dependence);
        if (audit->parsed())
            return cmd_audit(audit_input, audit_out, audit_matrix_ref, audit_clusters_ref,
                             audit_levels_ref, audit_driving, audit_dependence);
        if (survey->parsed())
            return cmd_survey(survey_responses, survey_catalog, survey_groups, survey_breakdowns,
                              survey_out);
        if (taxonomy->parsed())
            return cmd_taxonomy(taxonomy_catalog, taxonomy_mapping, taxonomy_dot, taxonomy_out);
        if (elicit->parsed())
            return cmd_elicit(elicit_factors, elicit_catalog, elicit_kind, elicit_output,
                              elicit_resume, elicit_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameter;
    }
    return kExitOk;
}
