#include "popmatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace popmatch {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back({no, raw});
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Tokenize a preference expression: names plus '[', ']', '>', ','.
std::vector<std::string> pref_tokens(int line, const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char c : s) {
        if (c == '[' || c == ']' || c == '>' || c == ',') {
            flush();
            out.push_back(std::string(1, c));
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    if (out.empty()) return out;
    (void)line;
    return out;
}

PreferenceList parse_pref_list(int line, const std::string& expr, Side item_side,
                               const std::map<std::string, VertexId>& names) {
    PreferenceList list;
    std::vector<VertexId> group;
    bool in_brackets = false;
    bool expect_item = true;  // after a separator or at the start

    auto lookup = [&](const std::string& tok) {
        auto it = names.find(tok);
        if (it == names.end()) throw ParseError(line, "unknown name '" + tok + "'");
        if (it->second.side != item_side)
            throw ParseError(line, "'" + tok + "' is on the wrong side for this list");
        return it->second;
    };

    for (const auto& tok : pref_tokens(line, expr)) {
        if (tok == "[") {
            if (in_brackets) throw ParseError(line, "nested '['");
            if (!expect_item) throw ParseError(line, "missing separator before '['");
            in_brackets = true;
        } else if (tok == "]") {
            if (!in_brackets) throw ParseError(line, "']' without '['");
            in_brackets = false;
            expect_item = false;
        } else if (tok == ">" || tok == ",") {
            if (in_brackets) throw ParseError(line, "separator inside a tie");
            if (expect_item) throw ParseError(line, "dangling separator");
            if (tok == ">") {
                if (group.empty()) throw ParseError(line, "empty rank group");
                list.groups.push_back(std::move(group));
                group.clear();
            }
            expect_item = true;
        } else {
            if (!in_brackets && !expect_item)
                throw ParseError(line, "missing separator before '" + tok + "'");
            group.push_back(lookup(tok));
            if (!in_brackets) expect_item = false;
        }
    }
    if (in_brackets) throw ParseError(line, "unterminated tie");
    if (expect_item && !group.empty()) throw ParseError(line, "dangling separator");
    if (!group.empty()) list.groups.push_back(std::move(group));
    return list;
}

}  // namespace

PreferenceInstance parse_instance(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.size() < 3) throw ParseError(lines.empty() ? 1 : lines.back().number,
                                           "expected model, agents, and jobs lines");

    // model line
    ModelTag model;
    {
        auto toks = split_ws(lines[0].text);
        if (toks.size() < 2 || toks[0] != "model")
            throw ParseError(lines[0].number, "expected 'model <kind>'");
        if (toks[1] == "one-sided" && toks.size() == 2) {
            model = {Model::OneSided, 1};
        } else if (toks[1] == "two-sided-one-tie" && toks.size() == 2) {
            model = {Model::TwoSidedOneTie, 1};
        } else if (toks[1] == "two-sided-ties" && toks.size() == 3 &&
                   toks[2].rfind("k=", 0) == 0) {
            try {
                model = {Model::TwoSidedTies, std::stoi(toks[2].substr(2))};
            } catch (const std::exception&) {
                throw ParseError(lines[0].number, "bad tie bound in '" + toks[2] + "'");
            }
            if (model.tie_cap < 1)
                throw ParseError(lines[0].number, "tie bound must be at least 1");
        } else {
            throw ParseError(lines[0].number, "unknown model '" + lines[0].text + "'");
        }
    }

    auto read_names = [&](const Line& line, const char* keyword) {
        auto toks = split_ws(line.text);
        if (toks.empty() || toks[0] != keyword)
            throw ParseError(line.number, std::string("expected '") + keyword + " <name>...'");
        return std::vector<std::string>(toks.begin() + 1, toks.end());
    };
    auto agent_names = read_names(lines[1], "agents");
    auto job_names = read_names(lines[2], "jobs");

    std::map<std::string, VertexId> by_name;
    for (int a = 0; a < static_cast<int>(agent_names.size()); ++a) {
        if (!by_name.emplace(agent_names[a], agent_id(a)).second)
            throw ParseError(lines[1].number, "duplicate name '" + agent_names[a] + "'");
    }
    for (int j = 0; j < static_cast<int>(job_names.size()); ++j) {
        if (!by_name.emplace(job_names[j], job_id(j)).second)
            throw ParseError(lines[2].number, "duplicate name '" + job_names[j] + "'");
    }

    std::vector<PreferenceList> agent_prefs(agent_names.size());
    std::vector<PreferenceList> job_prefs(job_names.size());
    std::vector<int> seen_agent(agent_names.size(), 0), seen_job(job_names.size(), 0);

    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto colon = line.text.find(':');
        if (colon == std::string::npos)
            throw ParseError(line.number, "expected '<name> : <preferences>'");
        auto owner_toks = split_ws(line.text.substr(0, colon));
        if (owner_toks.size() != 1)
            throw ParseError(line.number, "expected a single name before ':'");
        auto it = by_name.find(owner_toks[0]);
        if (it == by_name.end())
            throw ParseError(line.number, "unknown name '" + owner_toks[0] + "'");
        VertexId owner = it->second;
        std::string expr = line.text.substr(colon + 1);

        if (owner.side == Side::Agent) {
            if (seen_agent[owner.index]++)
                throw ParseError(line.number, "second list for '" + owner_toks[0] + "'");
            agent_prefs[owner.index] = parse_pref_list(line.number, expr, Side::Job, by_name);
            if (model.model != Model::TwoSidedTies &&
                !agent_prefs[owner.index].strict())
                throw ParseError(line.number, "ties are not allowed in this model");
            if (model.model == Model::TwoSidedTies &&
                agent_prefs[owner.index].max_group_size() > model.tie_cap)
                throw ParseError(line.number, "tie longer than declared k");
        } else {
            if (model.model != Model::TwoSidedTies)
                throw ParseError(line.number,
                                 "job preference lines are forbidden in this model");
            if (seen_job[owner.index]++)
                throw ParseError(line.number, "second list for '" + owner_toks[0] + "'");
            job_prefs[owner.index] = parse_pref_list(line.number, expr, Side::Agent, by_name);
            if (job_prefs[owner.index].max_group_size() > model.tie_cap)
                throw ParseError(line.number, "tie longer than declared k");
        }
    }

    for (std::size_t a = 0; a < agent_names.size(); ++a)
        if (!seen_agent[a])
            throw ParseError(lines.back().number,
                             "missing preference line for agent '" + agent_names[a] + "'");
    if (model.model == Model::TwoSidedTies) {
        for (std::size_t j = 0; j < job_names.size(); ++j)
            if (!seen_job[j])
                throw ParseError(lines.back().number,
                                 "missing preference line for job '" + job_names[j] + "'");
    }

    try {
        return PreferenceInstance::create(model, std::move(agent_names), std::move(job_names),
                                          std::move(agent_prefs),
                                          model.model == Model::TwoSidedTies
                                              ? std::move(job_prefs)
                                              : std::vector<PreferenceList>{});
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

namespace {

std::string format_pref_list(const PreferenceInstance& inst, const PreferenceList& list) {
    std::string out;
    bool first_group = true;
    for (const auto& group : list.groups) {
        if (!first_group) out += " > ";
        first_group = false;
        std::vector<std::string> names;
        names.reserve(group.size());
        for (VertexId v : group) names.push_back(inst.name(v));
        std::sort(names.begin(), names.end());
        if (names.size() == 1) {
            out += names[0];
        } else {
            out += "[";
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (i) out += " ";
                out += names[i];
            }
            out += "]";
        }
    }
    return out;
}

template <typename Names>
std::vector<int> sorted_by_name(const Names& names) {
    std::vector<int> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return names[a] < names[b]; });
    return order;
}

}  // namespace

std::string serialize_instance(const PreferenceInstance& inst) {
    std::ostringstream out;
    out << "model ";
    switch (inst.model().model) {
        case Model::OneSided: out << "one-sided"; break;
        case Model::TwoSidedOneTie: out << "two-sided-one-tie"; break;
        case Model::TwoSidedTies: out << "two-sided-ties k=" << inst.model().tie_cap; break;
    }
    out << "\n";

    auto agent_order = sorted_by_name(inst.agent_names());
    auto job_order = sorted_by_name(inst.job_names());

    out << "agents";
    for (int a : agent_order) out << " " << inst.agent_names()[a];
    out << "\njobs";
    for (int j : job_order) out << " " << inst.job_names()[j];
    out << "\n";

    for (int a : agent_order)
        out << inst.agent_names()[a] << " : "
            << format_pref_list(inst, inst.prefs(agent_id(a))) << "\n";
    if (inst.model().model == Model::TwoSidedTies) {
        for (int j : job_order)
            out << inst.job_names()[j] << " : "
                << format_pref_list(inst, inst.prefs(job_id(j))) << "\n";
    }
    return out.str();
}

Matching parse_matching(const PreferenceInstance& inst, const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& line : significant_lines(text)) {
        auto toks = split_ws(line.text);
        if (toks.size() != 2)
            throw ParseError(line.number, "expected '<agent> <job>'");
        auto a = inst.find_vertex(toks[0]);
        auto j = inst.find_vertex(toks[1]);
        if (!a || a->side != Side::Agent)
            throw ParseError(line.number, "unknown agent '" + toks[0] + "'");
        if (!j || j->side != Side::Job)
            throw ParseError(line.number, "unknown job '" + toks[1] + "'");
        pairs.emplace_back(a->index, j->index);
    }
    try {
        return Matching::from_pairs(inst, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_matching(const PreferenceInstance& inst, const Matching& m) {
    std::ostringstream out;
    for (int a : sorted_by_name(inst.agent_names()))
        if (m.job_of(a) >= 0)
            out << inst.agent_names()[a] << " " << inst.job_names()[m.job_of(a)] << "\n";
    return out.str();
}

PreferenceInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

Matching load_matching(const PreferenceInstance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matching(inst, buf.str());
}

}  // namespace popmatch
