#include "derivar/presentation_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "derivar/parser.hpp"

namespace derivar {

OperadPresentation load_presentation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("presentation file " + path.string() + ": " + e.what());
    }
    OperadPresentation p;
    try {
        p.name = doc.at("name").get<std::string>();
        p.ops = doc.at("ops").get<std::vector<std::string>>();
        if (doc.contains("relations")) {
            for (const auto& rel : doc.at("relations")) {
                int arity = rel.at("arity").get<int>();
                std::string expr = rel.at("expr").get<std::string>();
                if (arity != 2 && arity != 3)
                    throw std::invalid_argument("relation arity must be 2 or 3");
                Poly poly = parse_expr(expr, p.ops, arity);
                (arity == 2 ? p.rel2 : p.rel3).push_back(std::move(poly));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("presentation file " + path.string() + ": " + e.what());
    }
    p.validate();
    return p;
}

OperadPresentation resolve_presentation(const std::string& name_or_path) {
    if (is_builtin(name_or_path)) return builtin(name_or_path);
    return load_presentation_file(name_or_path);
}

}  // namespace derivar
