#pragma once

#include "arckit/core/error.hpp"
#include "arckit/core/rng.hpp"
#include "arckit/runtime/seeds.hpp"
#include "arckit/synth/model_client.hpp"
#include "arckit/synth/prompts.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace arckit::synth {

struct ProblemDescription {
    std::vector<std::string> concepts;
    /// May span several lines.
    std::string description;
    /// Ids of the seeds shown in the prompt that produced it (empty for seeds).
    std::vector<std::string> provenance;

    friend bool operator==(const ProblemDescription&, const ProblemDescription&) = default;
};

/// Too few usable model responses.
class GenerationError : public DataError {
public:
    using DataError::DataError;
};

struct FencedBlock {
    std::string language;  // text after the opening ```
    std::string body;
};

/// Every ``` fenced block in order. An unterminated final fence is ignored.
inline std::vector<FencedBlock> fenced_blocks(std::string_view text) {
    std::vector<FencedBlock> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<FencedBlock> open;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view trimmed = line;
        while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
        if (trimmed.substr(0, 3) == "```") {
            if (open) {
                if (!open->body.empty() && open->body.back() == '\n') open->body.pop_back();
                out.push_back(std::move(*open));
                open.reset();
            } else {
                open = FencedBlock{std::string(trimmed.substr(3)), {}};
            }
            continue;
        }
        if (open) open->body += line + "\n";
    }
    return out;
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

// Text of a comment line with the "#" and one following space removed.
inline std::optional<std::string> comment_text(std::string_view line) {
    std::string t = trim(line);
    if (t.empty() || t[0] != '#') return std::nullopt;
    std::string_view rest = std::string_view(t).substr(1);
    if (!rest.empty() && rest[0] == ' ') rest.remove_prefix(1);
    return std::string(rest);
}

} // namespace detail

/// Reads the "# concepts:" and "# description:" comment sections of a code
/// block. Throws DataError naming the missing or empty section.
inline ProblemDescription parse_header(std::string_view code) {
    std::istringstream in{std::string(code)};
    std::string line;
    enum class Section { None, Concepts, Description } section = Section::None;
    bool saw_concepts = false, saw_description = false;
    std::string concepts_text;
    std::vector<std::string> desc_lines;
    while (std::getline(in, line)) {
        auto c = detail::comment_text(line);
        if (!c) {
            if (saw_description && !desc_lines.empty()) break;
            section = Section::None;
            continue;
        }
        const std::string head = detail::trim(*c);
        if (head == "concepts:") {
            section = Section::Concepts;
            saw_concepts = true;
            continue;
        }
        if (head == "description:") {
            section = Section::Description;
            saw_description = true;
            continue;
        }
        if (section == Section::Concepts) concepts_text += (concepts_text.empty() ? "" : ", ") + head;
        if (section == Section::Description && !head.empty()) desc_lines.push_back(detail::trim(*c));
    }
    if (!saw_concepts) throw DataError("missing # concepts: header");
    if (!saw_description) throw DataError("missing # description: header");
    ProblemDescription d;
    std::string item;
    std::istringstream items(concepts_text);
    while (std::getline(items, item, ','))
        if (auto t = detail::trim(item); !t.empty()) d.concepts.push_back(t);
    for (std::size_t i = 0; i < desc_lines.size(); ++i) d.description += (i ? "\n" : "") + desc_lines[i];
    if (d.concepts.empty()) throw DataError("empty # concepts: section");
    if (d.description.empty()) throw DataError("empty # description: section");
    return d;
}

/// The comment header as it appears at the top of a program.
inline std::string format_header(const ProblemDescription& d) {
    std::string s = "# concepts:\n# ";
    for (std::size_t i = 0; i < d.concepts.size(); ++i) s += (i ? ", " : "") + d.concepts[i];
    s += "\n\n# description:";
    std::istringstream in(d.description);
    std::string line;
    while (std::getline(in, line)) s += "\n# " + line;
    return s;
}

/// A seed's header, read from its source text when present.
inline ProblemDescription seed_description(const runtime::SeedProgram& seed) {
    try {
        auto d = parse_header(seed.source_text);
        d.provenance = {seed.id};
        return d;
    } catch (const DataError&) {
        return {seed.concepts, seed.description, {seed.id}};
    }
}

struct ParsedDescriptions {
    std::vector<ProblemDescription> descriptions;
    /// One reason per dropped block.
    std::vector<std::string> dropped;
};

inline ParsedDescriptions parse_description_response(std::string_view response) {
    ParsedDescriptions out;
    int index = 0;
    for (const auto& block : fenced_blocks(response)) {
        ++index;
        try {
            out.descriptions.push_back(parse_header(block.body));
        } catch (const DataError& e) {
            out.dropped.push_back("block " + std::to_string(index) + ": " + e.what());
        }
    }
    return out;
}

struct DescriptionSampling {
    int examples_per_prompt = 3;
    int generations_per_prompt = 2;
    /// Upper bound on chat requests, as a multiple of the requested count.
    int max_request_factor = 3;
};

struct SampledDescriptions {
    std::vector<ProblemDescription> descriptions;
    std::vector<std::string> dropped;
    int requests = 0;
};

/// Remixes seed descriptions into `num` new ones. Each request shows a random
/// subset of the seeds and asks for several new headers.
inline SampledDescriptions sample_descriptions(const std::vector<ProblemDescription>& seed_descs, int num,
                                               ModelClient& client, Rng& rng, const DescriptionSampling& opt = {}) {
    if (seed_descs.empty()) throw std::invalid_argument("sample_descriptions: need at least one seed description");
    if (num < 1) throw std::invalid_argument("sample_descriptions: num must be >= 1");
    SampledDescriptions out;
    const int max_requests = std::max(1, num * opt.max_request_factor);
    while (static_cast<int>(out.descriptions.size()) < num && out.requests < max_requests) {
        std::vector<std::size_t> order(seed_descs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(opt.examples_per_prompt)));
        std::vector<std::string> blocks;
        std::vector<std::string> provenance;
        for (std::size_t i : order) {
            blocks.push_back(format_header(seed_descs[i]));
            for (const auto& id : seed_descs[i].provenance) provenance.push_back(id);
        }
        const int want = std::min(opt.generations_per_prompt, num - static_cast<int>(out.descriptions.size()));
        ++out.requests;
        auto parsed = parse_description_response(client.chat({{"user", description_prompt(blocks, want)}}));
        for (auto& r : parsed.dropped) out.dropped.push_back("request " + std::to_string(out.requests) + " " + r);
        for (auto& d : parsed.descriptions) {
            if (static_cast<int>(out.descriptions.size()) >= num) break;
            d.provenance = provenance;
            out.descriptions.push_back(std::move(d));
        }
    }
    if (out.descriptions.empty())
        throw GenerationError("no parseable descriptions after " + std::to_string(out.requests) + " requests");
    return out;
}

} // namespace arckit::synth
