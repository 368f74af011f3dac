// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON readers and writers for the record types. Every top-level document
// carries "schema": "etcs/1".

#ifndef ETCS_JSON_IO_H_
#define ETCS_JSON_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "etcs/assembler.h"

namespace etcs {

inline constexpr std::string_view kSchemaTag = "etcs/1";

// Parsers throw ValidationError whose path names the offending field. Paths
// referenced from an instance are resolved against base_dir.
GramMatrix GramFromJson(std::string_view text);
Configuration ConfigurationFromJson(std::string_view text);
GluingData GluingFromJson(std::string_view text);
FixedPointSet FixedPointSetFromJson(std::string_view text);
BlockRecord BlockFromJson(std::string_view text);
HyperPolygon PolygonFromJson(std::string_view text);
EtcsInstance InstanceFromJson(std::string_view text, const std::string& base_dir);

std::string ReadFile(const std::string& path);

Configuration LoadConfiguration(const std::string& path);
GluingData LoadGluing(const std::string& path);
FixedPointSet LoadFixedPointSet(const std::string& path);
BlockRecord LoadBlock(const std::string& path);
HyperPolygon LoadPolygon(const std::string& path);
EtcsInstance LoadInstance(const std::string& path);

std::string GluingToJson(const GluingData& g);
// Angle list using the tags "zero", "pi", {"cos2", "sign"} and {"float"}.
std::string AnglesToJson(const std::vector<ConfigAngle>& angles);
std::vector<ConfigAngle> AnglesFromJson(std::string_view text);

}  // namespace etcs

#endif  // ETCS_JSON_IO_H_
