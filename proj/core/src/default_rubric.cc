// Copyright 2026 The Rubriq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rubriq/corpus.h"

namespace rubriq {
namespace {

Criterion Make(std::string code, std::string name, ReportingElement element,
               std::string definition, std::string advice,
               std::vector<std::string> markers,
               std::array<std::string, kLevelCount> levels) {
  return Criterion{std::move(code),    std::move(name),    std::move(definition),
                   std::move(advice),  std::move(markers), std::move(levels),
                   element};
}

Rubric BuildDefaultRubric() {
  using E = ReportingElement;
  Rubric r;
  r.id = "knowledge-processes";
  r.name = "Knowledge processes";

  r.criteria.push_back(Make(
      "experiencing-the-known", "Experiencing the known", E::kExperiential,
      "The work connects its topic to the author's own experience, setting "
      "and reasons for caring about it.",
      "Say whether the personal and professional starting points are clear "
      "and suggest where a concrete example from practice would help.",
      {"my experience", "in my classroom", "I have seen", "familiar",
       "personally"},
      {"No link is made between the topic and the author's experience.",
       "Experience is mentioned in passing but does not shape the work.",
       "Relevant experience is described and partly connected to the topic.",
       "Experience is well described and clearly motivates the inquiry.",
       "Experience is vividly grounded and drives every part of the "
       "argument."}));

  r.criteria.push_back(Make(
      "experiencing-the-new", "Experiencing the new", E::kExperiential,
      "The work brings in new information gathered through observation, "
      "data, cases or research beyond what the author already knew.",
      "Point to claims that need fresh evidence and name sources or cases "
      "that would extend the author's view.",
      {"research shows", "data", "observed", "case study", "evidence",
       "survey"},
      {"No new information or evidence is introduced.",
       "New information appears but is thin or poorly sourced.",
       "Some credible new evidence supports part of the discussion.",
       "Varied, credible evidence is integrated into most sections.",
       "Rich, well-sourced evidence substantially extends what is known."}));

  r.criteria.push_back(Make(
      "conceptualizing-by-naming", "Conceptualizing by naming",
      E::kConceptual,
      "The work defines its key terms precisely and sorts examples into "
      "clear categories.",
      "Check whether central terms are defined before use and propose "
      "tighter definitions or classifications where meanings drift.",
      {"is defined as", "refers to", "a type of", "category", "term",
       "classify"},
      {"Key terms are missing or used without definition.",
       "Some terms are named but definitions are vague or inconsistent.",
       "Most key terms are defined and used with reasonable care.",
       "Terms are precisely defined and examples are well classified.",
       "Concepts are defined with disciplinary precision and organized into "
       "an illuminating scheme."}));

  r.criteria.push_back(Make(
      "conceptualizing-with-theory", "Conceptualizing with theory",
      E::kConceptual,
      "The work links concepts into a theory or model that explains how "
      "the parts of the topic relate.",
      "Ask how the concepts fit together and recommend theorists, models "
      "or frameworks that could organize the argument.",
      {"theory", "framework", "model", "according to", "relationship",
       "principle"},
      {"No theory or model is used to connect ideas.",
       "A theory is named but not applied to the topic.",
       "A relevant theory is applied to parts of the discussion.",
       "Theory is applied consistently and clarifies the relationships "
       "between concepts.",
       "Theory is critically synthesized into an original, coherent model."}));

  r.criteria.push_back(Make(
      "analyzing-functionally", "Analyzing functionally", E::kAnalytical,
      "The work traces causes, effects, functions and logical connections "
      "within its topic.",
      "Identify gaps in reasoning and suggest where cause and effect or "
      "structure and function could be argued more explicitly.",
      {"because", "therefore", "as a result", "leads to", "function",
       "consequently"},
      {"No reasoning about causes, effects or functions is offered.",
       "Reasoning is asserted rather than demonstrated.",
       "Some causal or functional links are explained with support.",
       "Causes, effects and functions are analyzed logically throughout.",
       "The analysis is rigorous, layered and persuasive at every step."}));

  r.criteria.push_back(Make(
      "analyzing-critically", "Analyzing critically", E::kAnalytical,
      "The work examines the interests, purposes and perspectives behind "
      "its topic, including whose voices are present or missing.",
      "Note unexamined assumptions and suggest perspectives or stakeholders "
      "the author could weigh.",
      {"perspective", "interests", "power", "bias", "assumption", "equity"},
      {"No perspectives or interests are considered.",
       "Alternative perspectives are mentioned but not examined.",
       "Some interests and assumptions are identified and discussed.",
       "Multiple perspectives are weighed with insight and fairness.",
       "Critical reflection reframes the topic and exposes hidden "
       "assumptions."}));

  r.criteria.push_back(Make(
      "applying-appropriately", "Applying appropriately", E::kApplied,
      "The work shows how its ideas can be put to work in a typical, "
      "real-world setting.",
      "Comment on whether the proposed practice is realistic and suggest "
      "steps that would make it easier to implement.",
      {"in practice", "implement", "apply", "lesson plan", "strategy",
       "in my school"},
      {"No practical application is proposed.",
       "An application is suggested but is vague or unrealistic.",
       "A workable application is outlined for a typical setting.",
       "The application is detailed, realistic and well justified.",
       "The application is thoroughly planned and ready to be used by "
       "others."}));

  r.criteria.push_back(Make(
      "applying-creatively", "Applying creatively", E::kApplied,
      "The work transfers its ideas to a new or unusual setting, or "
      "proposes an original innovation.",
      "Encourage bolder transfer and suggest an unexpected context where "
      "the ideas might produce something new.",
      {"innovative", "new approach", "transform", "reimagine", "novel",
       "creative"},
      {"No transfer or innovation is attempted.",
       "A new idea is hinted at but not developed.",
       "An original application is proposed with some development.",
       "A creative transfer is well developed and plausible.",
       "A genuinely original innovation is developed with convincing "
       "detail."}));

  r.criteria.push_back(Make(
      "communication", "Communication", E::kCommunication,
      "The work is clearly organized, well written, correctly referenced and "
      "suited to an academic audience.",
      "Flag passages that are hard to follow and suggest improvements to "
      "structure, style, citations or media.",
      {"clear", "organized", "structure", "citation", "style", "coherent"},
      {"Writing is disorganized and hard to follow.",
       "Organization and expression are uneven, with frequent errors.",
       "Writing is generally clear with some lapses in structure or "
       "referencing.",
       "Writing is clear, well structured and correctly referenced.",
       "Writing is polished, compelling and exemplary in academic "
       "convention."}));
  return r;
}

}  // namespace

const Rubric& DefaultRubric() {
  static const Rubric rubric = BuildDefaultRubric();
  return rubric;
}

}  // namespace rubriq
