#pragma once

// Check reports: named sub-checks with pass/fail and witness details.

#include <string>
#include <vector>

namespace centra {

struct Report {
    struct Item {
        std::string check;
        bool pass = true;
        std::string detail; // witness or summary, empty when passing
    };

    std::string name;
    std::vector<Item> items;

    bool pass() const {
        for (const Item& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(const std::string& check, bool ok, const std::string& detail = "") {
        items.push_back(Item{check, ok, detail});
    }
    void merge(const Report& sub) {
        for (const Item& it : sub.items)
            items.push_back(Item{sub.name + "/" + it.check, it.pass, it.detail});
    }
    const Item* first_failure() const {
        for (const Item& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
    std::string summary() const {
        std::string s = name + ": ";
        if (pass()) return s + "pass (" + std::to_string(items.size()) + " checks)";
        const Item* f = first_failure();
        return s + "FAIL at " + f->check + (f->detail.empty() ? "" : " [" + f->detail + "]");
    }
};

} // namespace centra
