// Copyright 2026 The Concord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CONCORD_SUBJECT_PARSER_H_
#define CONCORD_SUBJECT_PARSER_H_

#include <string>
#include <string_view>

#include "concord/subject_ast.h"

namespace concord::subject {

// Parses a C/Java-like source file. Never fails: regions that do not parse
// inside a method body or class body are skipped up to the next `;` or
// balanced `}` and kept as recovered LITERAL leaves. Statements found at file
// scope are grouped into synthetic, unnamed METHOD_DECL nodes.
SubjectAst ParseSubject(std::string_view text, std::string path = "");

}  // namespace concord::subject

#endif  // CONCORD_SUBJECT_PARSER_H_
