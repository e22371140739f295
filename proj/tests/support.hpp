#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "oracle/corpus.hpp"

namespace testsupport {

inline std::string corpus_dir()
{
    return AUGCAT_CORPUS_DIR;
}

inline std::string corpus_path(const std::string& name)
{
    return corpus_dir() + "/" + name;
}

inline augcat::Dga load_corpus_dga(const std::string& name, const std::string& field = "")
{
    std::optional<augcat::FieldSpec> override_field;
    if (!field.empty())
        override_field = augcat::FieldSpec::from_label(field);
    return augcat::Dga::parse(augcat::oracle::read_file(corpus_path(name)), override_field);
}

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

#ifdef AUGCAT_CLI_PATH
inline CliResult run_cli(const std::string& args)
{
    std::string cmd = std::string(AUGCAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}
#endif

class TempFile {
public:
    TempFile(const std::string& stem, const std::string& contents)
    {
        path_ = (std::filesystem::temp_directory_path() /
                 ("augcat_test_" + std::to_string(counter()++) + "_" + stem))
                    .string();
        std::ofstream out(path_, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path_, ec); }
    const std::string& path() const { return path_; }

private:
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    std::string path_;
};

}  // namespace testsupport
