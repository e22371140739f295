#include "augcat/report.hpp"

#include <sstream>

#include <json.hpp>

namespace augcat {

namespace {

std::string dims_inline(const std::map<int, int>& dims)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [q, d] : dims) {
        if (!first)
            s += ", ";
        first = false;
        s += std::to_string(q) + ":" + std::to_string(d);
    }
    return s + "}";
}

std::string poincare(const std::map<int, int>& dims)
{
    std::string s;
    for (const auto& [q, d] : dims) {
        if (d == 0)
            continue;
        if (!s.empty())
            s += " + ";
        std::string power;
        if (q == 0)
            power = "";
        else if (q == 1)
            power = "t";
        else
            power = "t^" + std::to_string(q);
        if (power.empty())
            s += std::to_string(d);
        else if (d == 1)
            s += power;
        else
            s += std::to_string(d) + "*" + power;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string bch_text(const std::map<int, int>& dims)
{
    std::ostringstream os;
    for (const auto& [q, d] : dims)
        os << "degree " << q << ": " << d << "\n";
    os << "total: " << poincare(dims) << "\n";
    return os.str();
}

std::string classes_text(const Dga&, const IsoClassification& c, bool include_audit)
{
    std::ostringstream os;
    os << "augmentations: " << c.augmentations.size() << "\n";
    os << "classes: " << c.class_count() << "\n";
    for (int cls = 0; cls < c.class_count(); ++cls) {
        const int rep = c.representative(cls);
        os << "class " << cls << ": size=" << c.members[cls].size() << " rep#" << rep << " ["
           << format_augmentation(c.augmentations[rep]) << "]"
           << " dilation-only=" << (c.dilation_only[cls] ? "yes" : "no") << " bch="
           << dims_inline(c.class_bch[cls]) << "\n";
    }
    if (include_audit)
        os << audit_report(c);
    return os.str();
}

std::string classes_json(const Dga& dga, const IsoClassification& c, bool include_audit)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["field"] = dga.field().label();
    j["augmentations"] = c.augmentations.size();
    j["classes"] = nlohmann::ordered_json::array();
    for (int cls = 0; cls < c.class_count(); ++cls) {
        nlohmann::ordered_json jc;
        jc["id"] = cls;
        jc["size"] = c.members[cls].size();
        jc["representative"] = c.representative(cls);
        jc["representative_values"] = format_augmentation(c.augmentations[c.representative(cls)]);
        jc["members"] = c.members[cls];
        jc["dilation_only"] = static_cast<bool>(c.dilation_only[cls]);
        nlohmann::ordered_json jb;
        for (const auto& [q, d] : c.class_bch[cls])
            jb[std::to_string(q)] = d;
        jc["bch"] = std::move(jb);
        j["classes"].push_back(std::move(jc));
    }
    if (include_audit)
        j["audit_violations"] = c.audit_violations;
    return j.dump(2) + "\n";
}

}  // namespace augcat
