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


#include "dcqo/files.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dcqo {

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_file_atomically(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write '" + tmp + "'");
        }
        f << content;
        f.flush();
        if (!f) {
            throw std::runtime_error("write to '" + tmp + "' failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace dcqo
