#include "symshift/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symshift/io.hpp"
#include "symshift/localmaps.hpp"
#include "symshift/shifts.hpp"

namespace symshift::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t list_cap = 10000;

std::string render_scalar(const ordered_json &v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string s;
        for (const auto &item : v) {
            if (!s.empty())
                s += ' ';
            s += render_scalar(item);
        }
        return s;
    }
    return v.dump();
}

// Collects the fields of one command result; rendered either as
// "key: value" lines or as a JSON object carrying the same fields.
class Report {
public:
    void headline(std::string line) { headline_ = std::move(line); }

    void field(const std::string &key, ordered_json value) {
        lines_.push_back(key + ": " + render_scalar(value));
        doc_[key] = std::move(value);
    }

    // Field rendered by custom text lines.
    void block(const std::string &key, ordered_json value, std::vector<std::string> lines) {
        for (auto &l : lines)
            lines_.push_back(std::move(l));
        doc_[key] = std::move(value);
    }

    void write(std::ostream &out, bool as_json) const {
        if (as_json) {
            out << doc_.dump(2) << "\n";
            return;
        }
        if (!headline_.empty())
            out << headline_ << "\n";
        for (const auto &l : lines_)
            out << l << "\n";
    }

private:
    std::string headline_;
    std::vector<std::string> lines_;
    ordered_json doc_ = ordered_json::object();
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string render_config(const Alphabet &alphabet, const PeriodicConfig &c) {
    return "(" + alphabet.format_word(c.primitive()) + ")";
}

struct Verdict {
    std::string question;
    bool answer = false;
    std::optional<std::string> witness;
    std::vector<std::pair<std::string, ordered_json>> extra;
};

int emit(const Verdict &v, Clock::time_point start, std::ostream &out, bool as_json) {
    Report r;
    r.headline(v.answer ? "yes" : "no");
    r.field("question", v.question);
    r.field("answer", v.answer ? "yes" : "no");
    if (v.witness)
        r.field("witness", *v.witness);
    for (const auto &[k, val] : v.extra)
        r.field(k, val);
    r.field("elapsed_ms", elapsed_ms(start));
    r.write(out, as_json);
    return v.answer ? Yes : No;
}

bool looks_like_presentation(const std::string &path) {
    if (std::filesystem::path(path).extension() == ".pres")
        return true;
    const auto text = io::read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{';
}

struct Options {
    bool json = false;
    std::string spec;
    std::string spec2;
    std::string rule;
    std::string word;
    std::string onto;
    std::string out_file;
    std::size_t max_n = 0;
    std::size_t order = 0;
    std::size_t radius = 1;
    std::uint64_t limit = 65536;
    bool list = false;
};

SftSpec target_of(const Options &o, const SftSpec &domain) { return o.onto.empty() ? domain : io::load_sft(o.onto); }

int shift_check(const Options &o, std::ostream &out) {
    const auto spec = io::load_sft(o.spec);
    Report r;
    r.field("file", o.spec);
    r.field("alphabet", spec.alphabet().symbols());
    ordered_json forbidden = ordered_json::array();
    for (const auto &w : spec.forbidden())
        forbidden.push_back(spec.alphabet().format_word(w));
    r.field("forbidden", forbidden);
    r.field("memory", spec.memory());
    r.field("empty", is_empty(spec));
    r.write(out, o.json);
    return Yes;
}

int shift_member(const Options &o, std::ostream &out) {
    const auto start = Clock::now();
    Verdict v;
    if (looks_like_presentation(o.spec)) {
        const auto graph = io::load_presentation(o.spec);
        if (!graph.is_labeled())
            throw Error(ErrorCode::Unlabeled, o.spec + ": membership needs a labeled presentation");
        const auto word = graph.alphabet()->parse_word(o.word);
        const auto trimmed = essential_form(graph);
        v.question = "is " + graph.alphabet()->format_word(word) + " in the language of " + o.spec;
        v.answer = !trimmed.empty() && labels_path(trimmed, word);
    } else {
        const auto spec = io::load_sft(o.spec);
        const auto word = spec.alphabet().parse_word(o.word);
        v.question = "is " + spec.alphabet().format_word(word) + " in the language of " + o.spec;
        v.answer = language_member(spec, word);
        v.extra.emplace_back("locally_allowed", is_locally_allowed(spec, word));
    }
    return emit(v, start, out, o.json);
}

int shift_periodic(const Options &o, std::ostream &out) {
    const auto spec = io::load_sft(o.spec);
    if (o.max_n == 0)
        throw Error(ErrorCode::BadLength, "--max-n must be at least 1");
    const std::optional<std::size_t> order = o.order ? std::optional(o.order) : std::nullopt;
    const auto census = periodic_census(spec, o.max_n, order);
    Report r;
    r.field("file", o.spec);
    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines{"n p_n q_n"};
    for (std::size_t n = 1; n <= census.max_n; ++n) {
        rows.push_back({{"n", n}, {"p", census.p[n - 1]}, {"q", census.q[n - 1]}});
        lines.push_back(std::to_string(n) + " " + std::to_string(census.p[n - 1]) + " " +
                        std::to_string(census.q[n - 1]));
    }
    r.block("census", rows, std::move(lines));
    if (o.list) {
        for (std::size_t n = 1; n <= census.max_n; ++n)
            if (census.p[n - 1] > list_cap)
                throw Error(ErrorCode::LimitExceeded, "P_" + std::to_string(n) + " has " +
                                                          std::to_string(census.p[n - 1]) + " points; --list is capped at " +
                                                          std::to_string(list_cap));
        ordered_json listing = ordered_json::object();
        std::vector<std::string> listing_lines;
        for (std::size_t n = 1; n <= census.max_n; ++n) {
            ordered_json configs = ordered_json::array();
            std::string line = "P_" + std::to_string(n) + ":";
            for (const auto &c : enumerate_periodic(spec, n, order)) {
                configs.push_back(render_config(spec.alphabet(), c));
                line += " " + render_config(spec.alphabet(), c);
            }
            if (configs.size() != census.p[n - 1])
                throw std::logic_error("enumerated periodic points disagree with the census");
            listing[std::to_string(n)] = std::move(configs);
            listing_lines.push_back(std::move(line));
        }
        r.block("periodic", listing, std::move(listing_lines));
    }
    r.write(out, o.json);
    return Yes;
}

int shift_presentation(const Options &o, std::ostream &out) {
    const auto spec = io::load_sft(o.spec);
    const auto graph = essential_presentation(spec, o.order ? std::optional(o.order) : std::nullopt).graph;
    const auto doc = io::format_presentation(graph);
    if (o.out_file.empty()) {
        out << doc;
        return Yes;
    }
    io::write_file(o.out_file, doc);
    Report r;
    r.field("states", graph.state_count());
    r.field("edges", graph.edge_count());
    r.field("written", o.out_file);
    r.write(out, o.json);
    return Yes;
}

int sofic_equal_cmd(const Options &o, std::ostream &out) {
    const auto start = Clock::now();
    const auto a = io::load_presentation(o.spec);
    const auto b = io::load_presentation(o.spec2);
    const auto cmp = sofic_equal(a, b);
    Verdict v;
    v.question = "do " + o.spec + " and " + o.spec2 + " present the same shift";
    v.answer = cmp.equal;
    if (cmp.counterexample) {
        v.witness = a.alphabet()->format_word(*cmp.counterexample);
        v.extra.emplace_back("witness_in", cmp.counterexample_in_first ? o.spec : o.spec2);
    }
    return emit(v, start, out, o.json);
}

int map_apply(const Options &o, std::ostream &out) {
    const auto spec = io::load_sft(o.spec);
    const auto rule = io::load_rule(o.rule, spec);
    const auto config = normalize_periodic(spec.alphabet().parse_word(o.word));
    const auto image = apply_to_periodic(rule, config);
    Report r;
    r.field("input", render_config(spec.alphabet(), config));
    r.field("image", render_config(spec.alphabet(), image));
    r.field("period", image.least_period());
    r.write(out, o.json);
    return Yes;
}

int map_image(const Options &o, std::ostream &out) {
    const auto spec = io::load_sft(o.spec);
    const auto rule = io::load_rule(o.rule, spec);
    const auto image = build_image_presentation(rule).trimmed();
    const auto doc = io::format_presentation(image.graph);
    if (o.out_file.empty()) {
        out << doc;
        return Yes;
    }
    io::write_file(o.out_file, doc);
    Report r;
    r.field("states", image.graph.state_count());
    r.field("edges", image.graph.edge_count());
    r.field("written", o.out_file);
    r.write(out, o.json);
    return Yes;
}

int map_surjective(const Options &o, std::ostream &out, bool goe) {
    const auto start = Clock::now();
    const auto spec = io::load_sft(o.spec);
    const auto rule = io::load_rule(o.rule, spec);
    const auto target = target_of(o, spec);
    const auto verdict = is_surjective(rule, target);
    Verdict v;
    const std::string onto = o.onto.empty() ? o.spec : o.onto;
    if (goe) {
        v.question = "does " + o.rule + " leave an orphan word of " + onto;
        v.answer = verdict.orphan.has_value();
    } else {
        v.question = "is " + o.rule + " onto " + onto;
        v.answer = verdict.surjective;
    }
    if (verdict.orphan)
        v.witness = spec.alphabet().format_word(*verdict.orphan);
    return emit(v, start, out, o.json);
}

int map_injective(const Options &o, std::ostream &out, bool pre) {
    const auto start = Clock::now();
    const auto spec = io::load_sft(o.spec);
    const auto rule = io::load_rule(o.rule, spec);
    Verdict v;
    v.question = std::string("is ") + o.rule + (pre ? " pre-injective" : " injective") + " on " + o.spec;
    v.answer = pre ? is_preinjective(rule) : is_injective(rule);
    return emit(v, start, out, o.json);
}

int map_audit(const Options &o, std::ostream &out) {
    const auto start = Clock::now();
    const auto spec = io::load_sft(o.spec);
    const auto report = audit_all_rules(spec, o.radius, o.limit);
    std::size_t injective = 0, surjective = 0, preinjective = 0;
    for (const auto &e : report.entries) {
        injective += e.selfmap && e.injective;
        surjective += e.selfmap && e.surjective;
        preinjective += e.selfmap && e.preinjective;
    }
    Verdict v;
    v.question = "is every injective radius-" + std::to_string(o.radius) + " selfmap of " + o.spec + " surjective";
    v.answer = report.violations.empty();
    v.extra.emplace_back("rules", report.entries.size());
    v.extra.emplace_back("selfmaps", report.selfmap_count());
    v.extra.emplace_back("injective", injective);
    v.extra.emplace_back("surjective", surjective);
    v.extra.emplace_back("preinjective", preinjective);
    ordered_json violations = report.violations;
    v.extra.emplace_back("violations", violations);
    emit(v, start, out, o.json);
    return report.violations.empty() ? Yes : InternalError;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Decision procedures for one-dimensional shift spaces", "symshift"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, auto fn) {
        auto *cmd = parent->add_subcommand(name, help);
        cmd->add_flag("--json", o.json, "Emit a JSON document");
        cmd->callback([&action, fn]() { action = fn; });
        return cmd;
    };

    auto *shift = app.add_subcommand("shift", "Shifts of finite type")->require_subcommand(1);
    leaf(shift, "check", "Parse a .sft file and summarize it", [&] { return shift_check(o, out); })
        ->add_option("spec", o.spec)->required();
    leaf(shift, "empty", "Is the shift empty?", [&] {
        const auto start = Clock::now();
        const auto spec = io::load_sft(o.spec);
        return emit(Verdict{"is " + o.spec + " empty", is_empty(spec), {}, {}}, start, out, o.json);
    })->add_option("spec", o.spec)->required();
    auto *member = leaf(shift, "member", "Is a word in the language?", [&] { return shift_member(o, out); });
    member->add_option("spec", o.spec, ".sft file or .pres presentation")->required();
    member->add_option("word", o.word)->required();
    leaf(shift, "irreducible", "Is the shift irreducible?", [&] {
        const auto start = Clock::now();
        const auto spec = io::load_sft(o.spec);
        return emit(Verdict{"is " + o.spec + " irreducible", is_irreducible(spec), {}, {}}, start, out, o.json);
    })->add_option("spec", o.spec)->required();
    leaf(shift, "mixing", "Is the shift mixing?", [&] {
        const auto start = Clock::now();
        const auto spec = io::load_sft(o.spec);
        return emit(Verdict{"is " + o.spec + " mixing", is_mixing(spec), {}, {}}, start, out, o.json);
    })->add_option("spec", o.spec)->required();
    leaf(shift, "dense-periodic", "Are periodic points dense?", [&] {
        const auto start = Clock::now();
        const auto spec = io::load_sft(o.spec);
        return emit(Verdict{"are periodic points dense in " + o.spec, periodic_density(spec), {}, {}}, start, out,
                    o.json);
    })->add_option("spec", o.spec)->required();
    auto *periodic = leaf(shift, "periodic", "Periodic point census", [&] { return shift_periodic(o, out); });
    periodic->add_option("spec", o.spec)->required();
    periodic->add_option("--max-n", o.max_n, "Largest period")->required();
    periodic->add_option("--order", o.order, "Higher-block order (default: memory)");
    periodic->add_flag("--list", o.list, "Enumerate P_n");
    auto *pres = leaf(shift, "presentation", "Emit the essential higher-block presentation",
                      [&] { return shift_presentation(o, out); });
    pres->add_option("spec", o.spec)->required();
    pres->add_option("--order", o.order, "Higher-block order (default: memory)");
    pres->add_option("--out", o.out_file, "Output .pres file (default: stdout)");

    auto *sofic = app.add_subcommand("sofic", "Sofic shifts")->require_subcommand(1);
    auto *equal = leaf(sofic, "equal", "Do two presentations accept the same shift?", [&] { return sofic_equal_cmd(o, out); });
    equal->add_option("a", o.spec)->required();
    equal->add_option("b", o.spec2)->required();

    auto *map = app.add_subcommand("map", "Local maps")->require_subcommand(1);
    auto with_rule = [&](CLI::App *cmd) {
        cmd->add_option("spec", o.spec)->required();
        cmd->add_option("rule", o.rule)->required();
        return cmd;
    };
    with_rule(leaf(map, "apply", "Image of a periodic configuration", [&] { return map_apply(o, out); }))
        ->add_option("--word", o.word, "Repeating block")->required();
    with_rule(leaf(map, "image", "Emit the image presentation", [&] { return map_image(o, out); }))
        ->add_option("--out", o.out_file, "Output .pres file (default: stdout)");
    with_rule(leaf(map, "surjective", "Is the map onto the target?", [&] { return map_surjective(o, out, false); }))
        ->add_option("--onto", o.onto, "Target .sft (default: the domain)");
    with_rule(leaf(map, "injective", "Is the map injective?", [&] { return map_injective(o, out, false); }));
    with_rule(leaf(map, "preinjective", "Is the map pre-injective?", [&] { return map_injective(o, out, true); }));
    with_rule(leaf(map, "goe", "Shortest Garden-of-Eden word", [&] { return map_surjective(o, out, true); }))
        ->add_option("--onto", o.onto, "Target .sft (default: the domain)");
    auto *audit = leaf(map, "audit", "Surjunctivity audit over all rules of a radius", [&] { return map_audit(o, out); });
    audit->add_option("spec", o.spec)->required();
    audit->add_option("--radius", o.radius)->required();
    audit->add_option("--limit", o.limit, "Refuse when the rule count exceeds this");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Yes : InputError;
    }

    try {
        return action ? action() : InputError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return InternalError;
    }
}

} // namespace symshift::cli
