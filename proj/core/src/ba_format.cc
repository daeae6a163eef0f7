#include "bamin/ba_format.hh"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace bamin {
namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string_view strip_brackets(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = trim(s.substr(1, s.size() - 2));
    return s;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

struct Edge {
    std::string_view label, src, dst;
};

Edge split_transition(const Line& l) {
    auto arrow = l.text.find("->");
    auto comma = l.text.find(',');
    if (arrow == std::string_view::npos) throw ParseError(l.number, "transition line lacks '->'");
    if (comma == std::string_view::npos || comma > arrow)
        throw ParseError(l.number, "transition line lacks 'label,' before the source state");
    Edge e{trim(l.text.substr(0, comma)), strip_brackets(l.text.substr(comma + 1, arrow - comma - 1)),
           strip_brackets(l.text.substr(arrow + 2))};
    if (e.label.empty()) throw ParseError(l.number, "empty transition label");
    if (e.src.empty() || e.dst.empty()) throw ParseError(l.number, "empty state name in transition");
    return e;
}

}  // namespace

Automaton parse_ba(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view t = trim(text.substr(start, end - start));
        if (!t.empty()) lines.push_back({number, t});
        start = end + 1;
    }
    if (lines.empty()) throw ParseError(1, "empty automaton description");

    std::size_t first = lines.size(), last = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].text.find("->") != std::string_view::npos) {
            if (first == lines.size()) first = i;
            last = i;
        }

    AutomatonBuilder b;
    std::vector<State> initial;
    for (std::size_t i = 0; i < std::min(first, lines.size()); ++i) {
        auto name = strip_brackets(lines[i].text);
        if (name.empty()) throw ParseError(lines[i].number, "empty state name");
        initial.push_back(b.state(name));
    }
    bool first_edge = true;
    if (first < lines.size()) {
        for (std::size_t i = first; i <= last; ++i) {
            Edge e = split_transition(lines[i]);
            State p = b.state(e.src);
            State q = b.state(e.dst);
            if (first_edge && initial.empty()) initial.push_back(p);
            first_edge = false;
            b.add_transition(p, b.add_symbol(e.label), q);
        }
    }
    std::vector<State> accepting;
    if (first < lines.size())
        for (std::size_t i = last + 1; i < lines.size(); ++i) {
            auto name = strip_brackets(lines[i].text);
            if (name.empty()) throw ParseError(lines[i].number, "empty state name");
            accepting.push_back(b.state(name));
        }

    for (State q : initial) b.set_initial(q);
    if (accepting.empty())
        for (State q = 0; q < b.num_states(); ++q) b.set_accepting(q);
    else
        for (State q : accepting) b.set_accepting(q);
    return b.build();
}

std::string serialize_ba(const Automaton& a) {
    const auto& names = a.state_names();
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        throw std::invalid_argument("state names are not distinct");
    // The grammar cannot say "no accepting state" (that reads as "all
    // accepting") nor describe zero states, so those cases name a fresh
    // isolated state instead. The language is unchanged.
    auto fresh = [&] {
        std::string name = "_";
        while (a.find_state(name)) name += '_';
        return name;
    };
    std::ostringstream out;
    if (a.num_states() == 0) {
        out << '[' << fresh() << "]\n";
        return out.str();
    }
    for (State q : a.initial()) out << '[' << a.state_name(q) << "]\n";
    for (const TransitionRef& t : a.transitions())
        out << a.symbol_label(t.sym) << ",[" << a.state_name(t.src) << "]->[" << a.state_name(t.dst) << "]\n";
    for (State q : a.accepting()) out << '[' << a.state_name(q) << "]\n";
    if (a.accepting().empty() && a.num_transitions() > 0) out << '[' << fresh() << "]\n";
    return out.str();
}

Automaton read_ba_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ba(buf.str());
}

void write_ba_file(const Automaton& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_ba(a);
}

Lasso parse_lasso(std::string_view text, const Automaton& a) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError(1, "lasso needs 'stem;cycle'");
    auto parse_word = [&](std::string_view part, const char* which) {
        std::vector<Symbol> w;
        part = trim(part);
        if (part.empty()) return w;
        std::size_t pos = 0;
        while (pos <= part.size()) {
            auto comma = part.find(',', pos);
            if (comma == std::string_view::npos) comma = part.size();
            auto label = trim(part.substr(pos, comma - pos));
            auto s = a.find_symbol(label);
            if (!s) throw ParseError(1, std::string(which) + " uses undeclared symbol '" + std::string(label) + "'");
            w.push_back(*s);
            pos = comma + 1;
        }
        return w;
    };
    Lasso w{parse_word(text.substr(0, semi), "stem"), parse_word(text.substr(semi + 1), "cycle")};
    if (w.cycle.empty()) throw ParseError(1, "cycle word is empty");
    return w;
}

std::string format_lasso(const Lasso& w, const Automaton& a) {
    std::string out;
    auto put = [&](const std::vector<Symbol>& word) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) out += ',';
            out += a.symbol_label(word[i]);
        }
    };
    put(w.stem);
    out += ';';
    put(w.cycle);
    return out;
}

}  // namespace bamin
