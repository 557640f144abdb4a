#include "gridperm/perm_set.hpp"

#include <istream>
#include <ostream>

namespace gridperm {

std::size_t PermSet::max_length() const noexcept {
    return members_.empty() ? 0 : members_.rbegin()->size();
}

void write_perm_set(std::ostream& out, const PermSet& set) {
    for (const SignedPerm& pi : set) out << pi.to_string() << '\n';
}

PermSet read_perm_set(std::istream& in) {
    PermSet set;
    std::string line;
    std::size_t line_no = 0;
    bool first_body_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        const bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank && !first_body_line)
            throw ParseError(line_no, "empty line (ε) is only allowed as the first entry");
        first_body_line = false;
        try {
            set.insert(SignedPerm::parse(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return set;
}

}  // namespace gridperm
