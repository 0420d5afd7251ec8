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

// Source snippets shared by the tests.

#ifndef CONCORD_TESTS_SUPPORT_FIXTURES_H_
#define CONCORD_TESTS_SUPPORT_FIXTURES_H_

#include <string_view>

namespace concord::testing {

inline constexpr std::string_view kCLikeMethod =
    "void foo(int x) {\n"
    "\tint a = 0;\n"
    "\tif (a < MIN) {\n"
    "\t   int b = a*MIN;\n"
    "\t}\n"
    "}\n";

inline constexpr std::string_view kForInitSource =
    "public static void foo(String[] args) {\n"
    "   for (int i = 1; i <= n; ++i) {\n"
    "     System.out.println(\"Printer\");\n"
    "   }\n"
    " }\n";

inline constexpr std::string_view kForInitPruned =
    "public static void foo(String[] args) {\n"
    "   for (; i <= n; ++i) {\n"
    "     System.out.println(\"Printer\");\n"
    "   }\n"
    " }\n";

// Whole-line deletion of the for header; what pruning must not produce.
inline constexpr std::string_view kForInitLineDeleted =
    "public static void foo(String[] args) {\n"
    "    \n"
    "     System.out.println(\"Printer\");\n"
    "   }\n"
    " }\n";

inline constexpr std::string_view kNoisyPrints =
    "public TwoPassDataIndexer(...PARAMS) {\n"
    "    TObjectIntHashMap predicateIndex;\n"
    "    List eventsToCompare;\n"
    "    predicateIndex = new TObjectIntHashMap();\n"
    "    System.out.println(STRING);\n"
    "    System.out.print(STRING);\n"
    "    try {\n"
    "      File tmp = File.createTempFile(\"events\", null);\n"
    "      tmp.deleteOnExit();\n"
    "      int numEvents = ...;\n"
    "    System.out.println(STRING);\n"
    "    System.out.print(STRING);\n"
    "      eventsToCompare = ...;\n"
    "      // done with predicates\n"
    "      predicateIndex = null;\n"
    "      tmp.delete();\n"
    "    System.out.println(STRING);\n"
    "    System.out.print(STRING);\n"
    "      sortAndMerge(eventsToCompare);\n"
    "    System.out.println(STRING);\n"
    "    }\n"
    "    catch(IOException e) {\n"
    "    System.out.println(e);\n"
    "    }\n";

inline constexpr std::string_view kGuardMethod =
    "void m(int a, int b) {\n"
    "  if (a != b) {\n"
    "    a = 5;\n"
    "  } else {\n"
    "    b = 5;\n"
    "  }\n"
    "}\n";

inline constexpr std::string_view kSumOfLiterals = "int i = 1+1;";

inline constexpr std::string_view kTaskTwoConfig =
    "Tasks {\n"
    "    task2 {\n"
    "        Edge add next_token\n"
    "        Edge add for_cfg\n"
    "        Edge add while_cfg\n"
    "        Edge add computed_from\n"
    "        Edge add guarded_by\n"
    "        Node remove simple_assignment\n"
    "        Conditions {\n"
    "            exclude while_block\n"
    "            exclude if_block\n"
    "}}}\n"
    "Representations {\n"
    "    r2 {\n"
    "        \"/dir/repos_list.csv\"\n"
    "        \"output_dir\"\n"
    "        AST\n"
    "        task2\n"
    "}}\n";

}  // namespace concord::testing

#endif  // CONCORD_TESTS_SUPPORT_FIXTURES_H_
