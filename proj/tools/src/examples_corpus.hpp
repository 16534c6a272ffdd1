#pragma once

#include <string>
#include <vector>

namespace aginv::cli {

struct BundledExample {
    std::string name;
    std::string text;
};

// Worked descriptor files shipped with the tool, in listing order.
const std::vector<BundledExample>& bundled_examples();
const BundledExample* find_example(const std::string& name);

}  // namespace aginv::cli
