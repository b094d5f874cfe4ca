/*
 * Copyright (c) 2026, The spacetime Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef SPACETIME_DIAGRAMS_EXPORT_HPP_
#define SPACETIME_DIAGRAMS_EXPORT_HPP_

#include <string>

#include "spacetime/diagrams/diagram.hpp"

namespace spacetime {

// Internal vertices solid, labelled "t.x\nstate"; borders dashed; edges
// labelled with their two ports.
std::string to_dot(const PortGraph& g, const std::string& title = "G");

// All arcs of all cuts; vertices seen with several states list them all.
std::string background_to_dot(const Background& bg);

// Summary of a diagram: cut count, budget and one entry per cut.
json diagram_index(const DiagramSet& ds);

// cut_<hash>.json per cut, background.dot and index.json. Throws ParseError
// when the directory cannot be written.
void export_diagram(const DiagramSet& ds, const std::string& dir);

std::string cut_file_name(const std::string& key);

}  // namespace spacetime

#endif  // SPACETIME_DIAGRAMS_EXPORT_HPP_
