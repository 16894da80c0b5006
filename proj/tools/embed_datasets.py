#!/usr/bin/env python3
"""Regenerates include/pagtc/detail/bundled_data.hpp from data/*.txt."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATASETS = ["flor-families", "les-miserables", "fig2-grid"]


def main():
    out = [
        "#pragma once",
        "",
        "// Generated by tools/embed_datasets.py from data/*.txt. Do not edit.",
        "",
        "#include <array>",
        "#include <string_view>",
        "",
        "namespace pagtc::detail {",
        "",
        "struct BundledAsset {",
        "    std::string_view name;",
        "    std::string_view text;",
        "};",
        "",
        f"inline constexpr std::array<BundledAsset, {len(DATASETS)}> kBundledAssets{{{{",
    ]
    for name in DATASETS:
        text = (ROOT / "data" / f"{name}.txt").read_text()
        out.append(f'    {{"{name}", R"edges({text})edges"}},')
    out += ["}};", "", "} // namespace pagtc::detail", ""]
    (ROOT / "include" / "pagtc" / "detail" / "bundled_data.hpp").write_text("\n".join(out))


if __name__ == "__main__":
    main()
