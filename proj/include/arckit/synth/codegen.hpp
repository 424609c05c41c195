#pragma once

#include "arckit/runtime/seeds.hpp"
#include "arckit/synth/descriptions.hpp"
#include "arckit/synth/prompts.hpp"

#include <string>
#include <vector>

namespace arckit::synth {

class NoCodeBlockError : public DataError {
public:
    using DataError::DataError;
};

/// The code of a model response: the first ```python block, else the first
/// fenced block of any language.
inline std::string extract_code_block(std::string_view response) {
    const auto blocks = fenced_blocks(response);
    for (const auto& b : blocks)
        if (b.language == "python" || b.language == "py") return b.body;
    if (!blocks.empty()) return blocks.front().body;
    throw NoCodeBlockError("response has no fenced code block");
}

inline std::vector<Message> codegen_messages(const ProblemDescription& desc,
                                             const std::vector<const runtime::SeedProgram*>& retrieved,
                                             std::string_view library_text) {
    std::vector<std::string> sources;
    for (const auto* s : retrieved) sources.push_back(s->source_text);
    return {{"user", codegen_prompt(format_header(desc), library_text, sources)}};
}

inline std::string generate_code(const ProblemDescription& desc,
                                 const std::vector<const runtime::SeedProgram*>& retrieved,
                                 std::string_view library_text, ModelClient& client) {
    if (retrieved.empty()) throw std::invalid_argument("generate_code: need at least one retrieved seed");
    return extract_code_block(client.chat(codegen_messages(desc, retrieved, library_text)));
}

} // namespace arckit::synth
