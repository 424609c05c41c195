#pragma once

// Prompt formats for description remixing, code generation, and the
// induction/transduction fine-tuning transcripts. The template strings are
// wire formats and must stay byte-exact.

#include "arckit/core/codec.hpp"
#include "arckit/core/task.hpp"
#include "arckit/synth/model_client.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arckit::synth {

inline constexpr std::string_view kDescriptionTemplate = R"(You've generated these on previous requests:

{examples}

Brainstorm {num_generations} more, using similar thinking:

```python
# concepts:
# <concepts in your new generation>

# description:
# <description of your new generation>
```
)";

inline constexpr std::string_view kCodegenTemplate =
    R"(You are a puzzle maker designing geometric, physical, and topological puzzles for curious middle-schoolers.

Each puzzle consists of uncovering a deterministic rule, pattern, procedure, algorithm, or transformation law that maps inputs to outputs.
Both the inputs and outputs are 2D grids of colored pixels. There are 10 colors, but the order of the colors is never relevant to the puzzle.

The middle schoolers are trying to discover this deterministic transformation, which can be implemented as a Python function called `main`.
Designing a puzzle involves also creating example inputs, which can be implemented as a Python function called `generate_input`. Unlike `main`, the `generate_input` function should be stochastic, so that every time you run it, you get another good example of what the transformation can be applied to.

Here is a overview of the puzzle you are designing:

{description}

Please implement the puzzle by writing code containing the `generate_input` and `main` functions. Use the following standard library (`common.py`):

```python
{common_lib}
```

Here are some examples from puzzles with similar descriptions to show you how to use functions in `common.py`:

{examples}

Your task is to implement the puzzle, following these steps:

1. Inspect the example puzzle implementations, making note of the functions used and the physical/geometric/topological/logical details
2. Inspect the new puzzle's description
3. Brainstorm a possible implementation for the new puzzle
4. Generate a code block formatted like the earlier examples with a comment starting `# concepts:` listing the concepts and `# description:` describing the inputs and transformation from the given description.

Be sure to make the transformation `main` deterministic. Follow the description closely.)";

inline constexpr std::string_view kTransductionSystem =
    "You are a world-class puzzle solver with exceptional pattern recognition skills. Your task is to analyze "
    "puzzles, spot patterns, and provide direct solutions.";

inline constexpr std::string_view kInductionSystem =
    "You are a world-class puzzle solver with exceptional pattern recognition skills and expertise in Python "
    "programming. Your task is to analyze puzzles and provide Python solutions.";

inline constexpr std::string_view kUserPreamble =
    "Given input-output grid pairs as reference examples, carefully observe the patterns to predict the output grid "
    "for new test input. Each pair follows the same transformation rule. Grids are 2D arrays represented as strings, "
    "with cells (colors) separated by spaces and rows by newlines.\n"
    "Here are the input and output grids for the reference examples:\n";

inline constexpr std::string_view kTransductionInstruction =
    "Directly provide the output grids corresponding to the given test input grids, based on the patterns observed "
    "in the reference examples.";

inline constexpr std::string_view kInductionInstruction =
    "Write a Python function `transform` that can convert any given input grid to its corresponding output grid "
    "based on the pattern observed in the reference examples.";

inline constexpr std::string_view kTransductionAnswerLead = "The output grid for the test input grid is:\n";

inline constexpr std::string_view kInductionAnswerLead =
    "Let's solve this puzzle using Python code with the common library functions. We'll first reason about the "
    "problem and then write the code to solve it. The `transform` function will take the input grid and return the "
    "output grid. Here is the Python code with the comments describing how to solve the problem:\n";

/// Replaces every "{name}" with its value; unknown placeholders stay as they are.
inline std::string fill_template(std::string_view tmpl, const std::vector<std::pair<std::string, std::string>>& values) {
    std::string out;
    out.reserve(tmpl.size());
    std::size_t i = 0;
    while (i < tmpl.size()) {
        bool replaced = false;
        if (tmpl[i] == '{') {
            for (const auto& [name, value] : values) {
                const std::string token = "{" + name + "}";
                if (tmpl.substr(i, token.size()) == token) {
                    out += value;
                    i += token.size();
                    replaced = true;
                    break;
                }
            }
        }
        if (!replaced) out += tmpl[i++];
    }
    return out;
}

/// Code in a ```python fence, trailing blank lines trimmed.
inline std::string fenced_python(std::string_view code) {
    std::string body(code);
    while (!body.empty() && (body.back() == '\n' || body.back() == ' ')) body.pop_back();
    return "```python\n" + body + "\n```";
}

inline std::string description_prompt(const std::vector<std::string>& example_blocks, int num_generations) {
    std::string examples;
    for (std::size_t i = 0; i < example_blocks.size(); ++i) {
        if (i) examples += "\n\n";
        examples += fenced_python(example_blocks[i]);
    }
    return fill_template(kDescriptionTemplate, {{"examples", examples}, {"num_generations", std::to_string(num_generations)}});
}

inline std::string codegen_prompt(std::string_view description_block, std::string_view common_lib,
                                  const std::vector<std::string>& example_sources) {
    std::string examples;
    for (std::size_t i = 0; i < example_sources.size(); ++i) {
        if (i) examples += "\n\n";
        examples += fenced_python(example_sources[i]);
    }
    return fill_template(kCodegenTemplate,
                         {{"description", std::string(description_block)}, {"common_lib", std::string(common_lib)},
                          {"examples", examples}});
}

/// Reference examples followed by the test input, as in the user turn.
inline std::string task_prompt_body(const std::vector<Pair>& train, const Grid& test_input) {
    std::string s(kUserPreamble);
    for (std::size_t i = 0; i < train.size(); ++i) {
        s += "Example " + std::to_string(i + 1) + "\n";
        s += "Input:\n" + encode_grid_text(train[i].input) + "\n\n";
        s += "Output:\n" + encode_grid_text(train[i].output) + "\n\n\n";
    }
    s += "Here is the input grid for the test example:\n";
    s += "Input:\n" + encode_grid_text(test_input) + "\n\n";
    return s;
}

inline std::vector<Message> transduction_messages(const std::vector<Pair>& train, const Grid& test_input) {
    return {{"system", std::string(kTransductionSystem)},
            {"user", task_prompt_body(train, test_input) + std::string(kTransductionInstruction)}};
}

inline std::vector<Message> induction_messages(const std::vector<Pair>& train, const Grid& test_input) {
    return {{"system", std::string(kInductionSystem)},
            {"user", task_prompt_body(train, test_input) + std::string(kInductionInstruction)}};
}

inline std::string transduction_answer(const Grid& output) {
    return std::string(kTransductionAnswerLead) + "```\n" + encode_grid_text(output) + "\n```";
}

inline std::string induction_answer(std::string_view source) {
    return std::string(kInductionAnswerLead) + fenced_python(source);
}

/// Plain-text transcript, one banner per turn.
inline std::string render_transcript(const std::vector<Message>& messages) {
    std::string s;
    for (const auto& m : messages) s += "-----  Role: " + m.role + "  --------------------\n" + m.content + "\n";
    return s;
}

} // namespace arckit::synth
