// Copyright 2026 The dcqo Authors
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


#ifndef DCQO_FILES_H
#define DCQO_FILES_H

#include <string>

namespace dcqo {

std::string read_file(const std::string &path);

/// Writes to `<path>.tmp` and renames over `path`.
void write_file_atomically(const std::string &path, const std::string &content);

}  // namespace dcqo

#endif
