#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process with string streams.
//
// Exit codes: 0 accept/pass, 1 reject/fail, 2 error or misuse,
// 3 jump and generation semantics disagree.

#include "gjfa/format.hpp"
#include "gjfa/gjfa.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace gjfa::cli {

using nlohmann::json;

inline constexpr int kAccept = 0;
inline constexpr int kReject = 1;
inline constexpr int kError = 2;
inline constexpr int kDisagree = 3;

/// Reads a system from a corpus name, `corpus:<name>`, `-` (stdin) or a file.
/// Corpus names win over files of the same name.
inline SystemValue load(const std::string& source, std::istream& in)
{
    std::string name = source;
    const bool forced = name.rfind("corpus:", 0) == 0;
    if (forced)
        name.erase(0, 7);
    if (forced || std::any_of(corpus_catalog().begin(), corpus_catalog().end(),
                              [&](const CorpusEntry& e) { return e.name == name; })) {
        const auto& entry = corpus_get(name);
        if (entry.kind == EntryKind::gjfa)
            return entry.gjfa();
        if (entry.kind == EntryKind::gcis)
            return entry.gcis();
        throw Error(Errc::invalid_argument,
                    "corpus entry '" + name + "' is a " + std::string(kind_name(entry.kind)) + ", not a system");
    }
    std::stringstream text;
    if (source == "-") {
        text << in.rdbuf();
    } else {
        std::ifstream file(source);
        if (!file)
            throw Error(Errc::invalid_argument, "cannot open '" + source + "'");
        text << file.rdbuf();
    }
    return parse_system(text.str());
}

inline Gjfa load_gjfa(const std::string& source, std::istream& in)
{
    auto v = load(source, in);
    if (auto* m = std::get_if<Gjfa>(&v))
        return std::move(*m);
    throw Error(Errc::invalid_argument, "'" + source + "' is not a gjfa");
}

inline GcInsSystem load_gcis(const std::string& source, std::istream& in)
{
    auto v = load(source, in);
    if (auto* g = std::get_if<GcInsSystem>(&v))
        return std::move(*g);
    throw Error(Errc::invalid_argument, "'" + source + "' is not a gcis");
}

inline RcGrammar load_rcg(const std::string& source, std::istream& in)
{
    auto v = load(source, in);
    if (auto* r = std::get_if<RcGrammar>(&v))
        return std::move(*r);
    throw Error(Errc::invalid_argument, "'" + source + "' is not an rcg");
}

/// A predicate corpus entry, or the jump membership of any GJFA input.
inline Membership load_oracle(const std::string& source, std::istream& in)
{
    std::string name = source.rfind("corpus:", 0) == 0 ? source.substr(7) : source;
    for (const auto& e : corpus_catalog())
        if (e.name == name && e.kind == EntryKind::predicate)
            return e.predicate();
    return jump_membership(load_gjfa(source, in));
}

inline void require_alphabet(const Word& w, const std::set<Symbol>& alphabet)
{
    for (const auto& s : w)
        if (!alphabet.contains(s))
            throw Error(Errc::invalid_argument, "symbol '" + s.name() + "' is not in the alphabet");
}

inline LangSet parse_words(const std::vector<std::string>& words)
{
    LangSet out;
    for (const auto& w : words)
        out.insert(Word::parse(w));
    return out;
}

inline json words_json(const LangSet& l)
{
    json out = json::array();
    for (const auto& w : l)
        out.push_back(w.str());
    return out;
}

inline json rule_json(const Rule& r) { return {{"from", r.from.name()}, {"label", r.label.str()}, {"to", r.to.name()}}; }

inline json witness_json(const AcceptanceWitness& w)
{
    json steps = json::array();
    for (const auto& s : w.steps)
        steps.push_back({{"rule", rule_json(s.rule)}, {"position", s.position}});
    return {{"steps", steps}};
}

inline json factorization_json(const UcFactorization& f)
{
    return {{"position", f.position}, {"prefix", f.prefix.str()}, {"factor", f.factor.str()}, {"suffix", f.suffix.str()}};
}

inline json uc_report_json(const UcReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            {{"factorization", factorization_json(v.factorization)}, {"split", v.split}, {"probe", v.probe.str()}});
    return {{"verdict", verdict_name(r.verdict)},
            {"word", r.word.str()},
            {"degree", r.degree},
            {"trivial", r.trivial},
            {"witness", r.witness ? factorization_json(*r.witness) : json(nullptr)},
            {"violations", violations}};
}

inline json equiv_json(const EquivReport& r)
{
    json cx = json::array();
    for (const auto& c : r.counterexamples)
        cx.push_back({{"word", c.word.str()}, {"in_left", c.in_left}, {"in_right", c.in_right}});
    return {{"equal", r.equal}, {"bound", r.bound}, {"counterexamples", cx}, {"truncated", r.truncated}};
}

inline void print_uc(std::ostream& out, const UcReport& r)
{
    out << verdict_name(r.verdict) << ": " << r.word << " at degree " << r.degree << '\n';
    if (r.witness) {
        out << "factor " << r.witness->factor << " at position " << r.witness->position << (r.trivial ? " (trivial)" : "")
            << '\n';
    }
    for (const auto& v : r.violations)
        out << "factor " << v.factorization.factor << " at " << v.factorization.position << ": split " << v.split
            << " gives " << v.probe << " outside L\n";
}

inline void print_equiv(std::ostream& out, const EquivReport& r, std::string_view relation)
{
    out << (r.equal ? relation : std::string_view("differ")) << " up to length " << r.bound << '\n';
    for (const auto& c : r.counterexamples)
        out << c.word << ' ' << (c.in_left ? "left-only" : "right-only") << '\n';
    if (r.truncated)
        out << "(more counterexamples omitted)\n";
}

struct Options {
    bool json_mode = false;
    std::size_t max_len = 8;
    std::string semantics = "jump";
    std::vector<std::string> inputs;
    std::vector<std::string> k;
    std::vector<std::string> alphabet;
    std::string word;
    std::string oracle;
    std::size_t degree = 0;
};

/// One method per subcommand; each returns the exit code.
class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::istream& in) : o_(o), out_(out), in_(in) {}

    int member()
    {
        need(2, "member <input> <word>");
        const Gjfa m = load_gjfa(o_.inputs[0], in_);
        const Word w = Word::parse(o_.inputs[1]);
        require_alphabet(w, m.alphabet);

        json report{{"word", w.str()}, {"semantics", o_.semantics}};
        std::optional<bool> jump, generate;
        std::optional<AcceptanceWitness> witness;
        if (o_.semantics == "jump" || o_.semantics == "both") {
            auto r = jump_accepts(m, w);
            jump = r.accepted;
            witness = r.witness;
        }
        if (o_.semantics == "generate" || o_.semantics == "both")
            generate = generate_accepts(m, w);
        const bool agree = !jump || !generate || *jump == *generate;
        const bool accepted = jump ? *jump : *generate;

        if (o_.json_mode) {
            report["accepted"] = accepted;
            report["jump"] = jump ? json(*jump) : json(nullptr);
            report["generate"] = generate ? json(*generate) : json(nullptr);
            report["agree"] = agree;
            report["witness"] = witness ? witness_json(*witness) : json(nullptr);
            out_ << report.dump(2) << '\n';
        } else {
            if (jump && generate)
                out_ << "jump: " << verdict(*jump) << "\ngenerate: " << verdict(*generate) << '\n';
            out_ << verdict(accepted) << '\n';
            if (witness)
                for (const auto& s : witness->steps)
                    out_ << "  delete " << s.rule.label << " at " << s.position << " by (" << s.rule.from << ", "
                         << s.rule.label << ", " << s.rule.to << ")\n";
        }
        if (!agree)
            return kDisagree;
        return accepted ? kAccept : kReject;
    }

    int enumerate()
    {
        need(1, "enum <input>");
        auto system = load(o_.inputs[0], in_);
        const LangSet words = std::visit(
            [&](const auto& x) -> LangSet {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Gjfa>)
                    return enumerate_language(x, o_.max_len);
                else if constexpr (std::is_same_v<T, GcInsSystem>)
                    return gcis_enumerate(x, o_.max_len);
                else if constexpr (std::is_same_v<T, InsSystem>)
                    return ins_enumerate(x, o_.max_len);
                else
                    return rcg_enumerate(x, o_.max_len);
            },
            system);
        if (o_.json_mode)
            out_ << json{{"bound", o_.max_len}, {"words", words_json(words)}}.dump(2) << '\n';
        else
            for (const auto& w : words)
                out_ << w << '\n';
        return kAccept;
    }

    int show()
    {
        need(1, "show <input>");
        out_ << serialize(load(o_.inputs[0], in_));
        return kAccept;
    }

    int transform(const std::string& op)
    {
        Gjfa result = [&] {
            if (op == "finite") {
                need(0, "transform finite --k <words>");
                std::set<Symbol> sigma;
                for (const auto& a : o_.alphabet)
                    sigma.emplace(a);
                return finite_gjfa(parse_words(o_.k), sigma);
            }
            if (op == "union") {
                need(2, "transform union <left> <right>");
                return union_gjfa(load_gjfa(o_.inputs[0], in_), load_gjfa(o_.inputs[1], in_));
            }
            need(1, "transform " + op + " <input>");
            Gjfa m = load_gjfa(o_.inputs[0], in_);
            if (op == "reverse")
                return reverse_gjfa(m);
            if (op == "insert")
                return insert_gjfa(m, parse_words(o_.k));
            return insert_star_gjfa(m, parse_words(o_.k));
        }();
        out_ << serialize(result);
        return kAccept;
    }

    int convert(const std::string& op)
    {
        need(1, "convert " + op + " <input>");
        const std::string& src = o_.inputs[0];
        if (op == "to-gcis")
            out_ << serialize(gcis_from_gjfa(load_gjfa(src, in_)));
        else if (op == "from-gcis")
            out_ << serialize(gjfa_from_gcis(load_gcis(src, in_)));
        else if (op == "gcis-to-rcg")
            out_ << serialize(rcg_from_gcis(load_gcis(src, in_)));
        else
            out_ << serialize(gcis_from_rcg(load_rcg(src, in_)));
        return kAccept;
    }

    int compare(bool equivalence)
    {
        need(2, equivalence ? "check equiv <left> <right>" : "check inclusion <left> <right>");
        const Gjfa a = load_gjfa(o_.inputs[0], in_), b = load_gjfa(o_.inputs[1], in_);
        const EquivReport r = equivalence ? bounded_equiv(a, b, o_.max_len) : bounded_inclusion(a, b, o_.max_len);
        if (o_.json_mode)
            out_ << equiv_json(r).dump(2) << '\n';
        else
            print_equiv(out_, r, equivalence ? "equal" : "included");
        return r.equal ? kAccept : kReject;
    }

    int uc_falsify()
    {
        need(0, "check uc-falsify --oracle <name|input> --word <w> --degree <n>");
        if (o_.oracle.empty() || o_.word.empty())
            throw Error(Errc::invalid_argument, "uc-falsify needs --oracle and --word");
        const UcReport r = uc_condition(load_oracle(o_.oracle, in_), Word::parse(o_.word), o_.degree);
        if (o_.json_mode)
            out_ << uc_report_json(r).dump(2) << '\n';
        else
            print_uc(out_, r);
        return r.verdict == UcVerdict::passes ? kAccept : kReject;
    }

    int uc_soundness()
    {
        need(1, "check uc-soundness <input>");
        const Gjfa m = load_gjfa(o_.inputs[0], in_);
        const std::size_t n = degree(m);
        const bool pass = uc_soundness_check(m, o_.max_len);
        std::optional<UcReport> failure;
        std::size_t checked = 0;
        if (n > 0) {
            auto sweep = uc_sweep(jump_membership(m), enumerate_language(m, o_.max_len), n);
            checked = sweep.reports.size();
            if (sweep.first_falsified)
                failure = sweep.reports[*sweep.first_falsified];
        }
        if (o_.json_mode) {
            out_ << json{{"passes", pass},
                         {"degree", n},
                         {"bound", o_.max_len},
                         {"checked", checked},
                         {"first_falsified", failure ? uc_report_json(*failure) : json(nullptr)}}
                        .dump(2)
                 << '\n';
        } else {
            out_ << (pass ? "passes" : "falsified") << ": " << checked << " words up to length " << o_.max_len
                 << " at degree " << n << '\n';
            if (failure)
                print_uc(out_, *failure);
        }
        return pass ? kAccept : kReject;
    }

    int jfa_parikh()
    {
        need(1, "check jfa-parikh <input>");
        const Gjfa m = load_gjfa(o_.inputs[0], in_);
        const Nfa<Symbol> n = classical_reading(m);
        std::set<Word> regular;
        for (auto& seq : n.enumerate(o_.max_len))
            regular.insert(Word(std::move(seq)));
        const LangSet closure = perm_closure(LangSet(std::move(regular), o_.max_len));
        const LangSet lang = enumerate_language(m, o_.max_len);
        LangSet mismatch;
        for (const auto& w : set_union(lang, closure))
            if (lang.contains(w) != closure.contains(w))
                mismatch.insert(w);
        const bool pass = mismatch.empty();
        if (o_.json_mode)
            out_ << json{{"holds", pass}, {"bound", o_.max_len}, {"mismatches", words_json(mismatch)}}.dump(2) << '\n';
        else {
            out_ << (pass ? "holds" : "fails") << " up to length " << o_.max_len << '\n';
            for (const auto& w : mismatch)
                out_ << w << (lang.contains(w) ? " language-only" : " closure-only") << '\n';
        }
        return pass ? kAccept : kReject;
    }

    int corpus_list_cmd()
    {
        if (o_.json_mode) {
            json rows = json::array();
            for (const auto& l : corpus_list())
                rows.push_back({{"name", l.name}, {"kind", kind_name(l.kind)}, {"citation", l.citation}});
            out_ << rows.dump(2) << '\n';
        } else {
            for (const auto& l : corpus_list())
                out_ << l.name << '\t' << kind_name(l.kind) << '\t' << l.citation << '\n';
        }
        return kAccept;
    }

private:
    static std::string_view verdict(bool accepted) { return accepted ? "accept" : "reject"; }

    void need(std::size_t count, const std::string& usage) const
    {
        if (o_.inputs.size() != count)
            throw Error(Errc::invalid_argument, "usage: " + usage);
    }

    const Options& o_;
    std::ostream& out_;
    std::istream& in_;
};

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in = std::cin)
{
    Options o;
    CLI::App app{"General jumping finite automata workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json_mode, "Machine-readable report");

    const auto inputs = [&](CLI::App* sub, const std::string& desc) {
        sub->add_option("inputs", o.inputs, desc);
    };
    const auto max_len = [&](CLI::App* sub) {
        sub->add_option("--max-len", o.max_len, "Length bound (default 8)");
    };

    auto* member = app.add_subcommand("member", "Decide membership of a word");
    inputs(member, "<input> <word>");
    member->add_option("--semantics", o.semantics, "jump, generate or both")
        ->check(CLI::IsMember({"jump", "generate", "both"}));

    auto* en = app.add_subcommand("enum", "List the language up to a length bound in shortlex order");
    inputs(en, "<input>");
    max_len(en);

    auto* show = app.add_subcommand("show", "Print the canonical serialization");
    inputs(show, "<input>");

    auto* transform = app.add_subcommand("transform", "Build a new automaton");
    transform->require_subcommand(1);
    std::string op;
    for (const char* name : {"reverse", "union", "insert", "insert-star", "finite"}) {
        auto* sub = transform->add_subcommand(name);
        inputs(sub, "inputs");
        if (std::string_view(name) == "insert" || std::string_view(name) == "insert-star" ||
            std::string_view(name) == "finite")
            sub->add_option("--k", o.k, "Words of K, comma separated")->delimiter(',');
        if (std::string_view(name) == "finite")
            sub->add_option("--alphabet", o.alphabet, "Extra alphabet symbols")->delimiter(',');
        sub->callback([&op, name] { op = name; });
    }

    auto* convert = app.add_subcommand("convert", "Convert between GJFA and insertion systems");
    convert->require_subcommand(1);
    for (const char* name : {"to-gcis", "from-gcis", "gcis-to-rcg", "rcg-to-gcis"}) {
        auto* sub = convert->add_subcommand(name);
        inputs(sub, "<input>");
        sub->callback([&op, name] { op = name; });
    }

    auto* check = app.add_subcommand("check", "Bounded analyses");
    check->require_subcommand(1);
    for (const char* name : {"equiv", "inclusion", "uc-falsify", "uc-soundness", "jfa-parikh"}) {
        auto* sub = check->add_subcommand(name);
        inputs(sub, "inputs");
        max_len(sub);
        if (std::string_view(name) == "uc-falsify") {
            sub->add_option("--oracle", o.oracle, "Predicate name or automaton");
            sub->add_option("--word", o.word, "Word to test");
            sub->add_option("--degree", o.degree, "UC degree n")->required();
        }
        sub->callback([&op, name] { op = name; });
    }

    auto* corpus = app.add_subcommand("corpus", "Built-in entries");
    corpus->require_subcommand(1);
    corpus->add_subcommand("list", "List names, kinds and sources");
    auto* corpus_show = corpus->add_subcommand("show", "Print a built-in system");
    inputs(corpus_show, "<name>");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAccept : kError;
    }

    try {
        Runner r(o, out, in);
        if (member->parsed())
            return r.member();
        if (en->parsed())
            return r.enumerate();
        if (show->parsed() || corpus_show->parsed())
            return r.show();
        if (transform->parsed())
            return r.transform(op);
        if (convert->parsed())
            return r.convert(op);
        if (check->parsed()) {
            if (op == "equiv" || op == "inclusion")
                return r.compare(op == "equiv");
            if (op == "uc-falsify")
                return r.uc_falsify();
            if (op == "uc-soundness")
                return r.uc_soundness();
            return r.jfa_parikh();
        }
        return r.corpus_list_cmd();
    } catch (const Error& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kError;
}

} // namespace gjfa::cli
