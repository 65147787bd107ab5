#include "nppc/error.hpp"
#include "nppc/solver.hpp"

namespace nppc::solver {

// The template reproduced byte for byte, including the trailing space after
// "# Problem to Solve:" and the blank line after the fenced stub. Slots are
// filled by concatenation only; no other text is injected.
PromptBundle render_prompt(const gym::ProblemDescriptor& descriptor,
                           const std::vector<gym::GeneratedPair>& examples,
                           const Instance& target) {
  if (examples.empty())
    fail(Errc::problem_mismatch, "render_prompt: at least one example needed");
  if (target.problem != descriptor.id)
    fail(Errc::problem_mismatch,
         "render_prompt: target problem is " + problem_name(target.problem) +
             ", descriptor is " + descriptor.name);

  PromptBundle bundle;
  bundle.shots = static_cast<int>(examples.size());

  std::string block;
  for (const auto& ex : examples) {
    if (ex.instance.problem != descriptor.id)
      fail(Errc::problem_mismatch,
           "render_prompt: example problem is " +
               problem_name(ex.instance.problem) + ", descriptor is " +
               descriptor.name);
    std::string inst = canonical_dump(ex.instance.payload);
    std::string sol = canonical_dump(ex.planted);
    block += "Problem: " + inst + "\n{\"solution\": " + sol + "}\n";
    bundle.example_pairs.emplace_back(std::move(inst), std::move(sol));
  }

  bundle.text =
      "\n# " + descriptor.name + " Problem Description:\n" +
      descriptor.description +
      "\n\n# Examples:\n" + block +
      "\n# Problem to Solve: \n"
      "Problem: " + canonical_dump(target.payload) +
      "\n\n# Instruction:\n"
      "Now please solve the above problem. Reason step by step and present "
      "your answer in the \"solution\" field in the following json format:\n"
      "```json\n"
      "{\"solution\": \"___\" }\n"
      "```\n\n";
  return bundle;
}

}  // namespace nppc::solver
