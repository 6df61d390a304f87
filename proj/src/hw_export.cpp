#include "fsmsynth/hw_export.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace fsmsynth::hw {

namespace {

std::string to_binary(uint32_t value, uint32_t width) {
    std::string s(width, '0');
    for (uint32_t b = 0; b < width; ++b) {
        if ((value >> b) & 1u) s[width - 1 - b] = '1';
    }
    return s;
}

uint32_t from_binary(std::string_view digits) {
    uint32_t value = 0;
    for (char c : digits) {
        if (c != '0' && c != '1') {
            throw std::runtime_error("expected binary digits, got '" +
                                     std::string(digits) + "'");
        }
        value = (value << 1) | static_cast<uint32_t>(c - '0');
    }
    return value;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

void check_ram(const RamImage& ram) {
    if (ram.address_bits == 0 || ram.data_bits == 0 ||
        ram.words.size() != (size_t{1} << ram.address_bits)) {
        throw std::invalid_argument("malformed RAM image");
    }
}

}  // namespace

bool is_valid_module_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::string export_truth_table(const RamImage& ram) {
    check_ram(ram);
    std::string out = "address[" + std::to_string(ram.address_bits - 1) +
                      ":0] data[" + std::to_string(ram.data_bits - 1) + ":0]\n";
    for (size_t addr = 0; addr < ram.words.size(); ++addr) {
        out += to_binary(static_cast<uint32_t>(addr), ram.address_bits);
        out += ' ';
        out += to_binary(ram.words[addr], ram.data_bits);
        out += '\n';
    }
    return out;
}

std::string export_mif(const RamImage& ram) {
    check_ram(ram);
    std::string out;
    out += "DEPTH = " + std::to_string(ram.words.size()) + ";\n";
    out += "WIDTH = " + std::to_string(ram.data_bits) + ";\n";
    out += "ADDRESS_RADIX = BIN;\n";
    out += "DATA_RADIX = BIN;\n";
    out += "\n";
    out += "CONTENT\n";
    out += "BEGIN\n";
    for (size_t addr = 0; addr < ram.words.size(); ++addr) {
        out += to_binary(static_cast<uint32_t>(addr), ram.address_bits);
        out += " : ";
        out += to_binary(ram.words[addr], ram.data_bits);
        out += ";\n";
    }
    out += "END;\n";
    return out;
}

std::string export_hdl(const RamImage& ram, const EncodingSpec& spec,
                       std::string_view module_name) {
    check_ram(ram);
    if (!is_valid_module_name(module_name)) {
        throw std::invalid_argument("invalid module name: " + std::string(module_name));
    }
    if (spec.ram_address_bits != ram.address_bits || spec.ram_data_bits != ram.data_bits) {
        throw std::invalid_argument("RAM image shape does not match encoding");
    }
    const uint32_t t = spec.triggers;
    const uint32_t x = spec.input_bits;
    const uint32_t y = spec.output_bits;
    const std::string name(module_name);

    std::string out;
    out += "// " + name + ": Mealy machine realized as a synchronous ROM lookup.\n";
    out += "// S=" + std::to_string(spec.states) + " states, T=" + std::to_string(t) +
           " triggers, x=" + std::to_string(x) + " input bits, y=" + std::to_string(y) +
           " output bits\n";
    out += "// address = {state, in}; data = {next_state, out}\n";
    out += "module " + name + " (\n";
    out += "  input  wire clk,\n";
    out += "  input  wire rst,\n";
    out += "  input  wire [" + std::to_string(x - 1) + ":0] in,\n";
    out += "  output wire [" + std::to_string(y - 1) + ":0] out\n";
    out += ");\n";
    out += "\n";
    out += "  reg  [" + std::to_string(t - 1) + ":0] state;\n";
    out += "  reg  [" + std::to_string(t + y - 1) + ":0] word;\n";
    out += "  wire [" + std::to_string(t + x - 1) + ":0] addr = {state, in};\n";
    out += "\n";
    out += "  always @* begin\n";
    out += "    case (addr)\n";
    for (size_t addr = 0; addr < ram.words.size(); ++addr) {
        out += "      " + std::to_string(ram.address_bits) + "'b" +
               to_binary(static_cast<uint32_t>(addr), ram.address_bits) + ": word = " +
               std::to_string(ram.data_bits) + "'b" + to_binary(ram.words[addr], ram.data_bits) +
               ";\n";
    }
    out += "    endcase\n";
    out += "  end\n";
    out += "\n";
    out += "  always @(posedge clk) begin\n";
    out += "    if (rst)\n";
    out += "      state <= " + std::to_string(t) + "'b" + to_binary(0, t) + ";\n";
    out += "    else\n";
    out += "      state <= word[" + std::to_string(t + y - 1) + ":" + std::to_string(y) +
           "];\n";
    out += "  end\n";
    out += "\n";
    out += "  assign out = word[" + std::to_string(y - 1) + ":0];\n";
    out += "\n";
    out += "endmodule\n";
    return out;
}

ExportBundle make_bundle(const MealyMachine& machine, std::string_view module_name) {
    const RamImage ram = to_ram_image(machine, machine.spec);
    ExportBundle bundle;
    bundle.truth_table = export_truth_table(ram);
    bundle.mif = export_mif(ram);
    bundle.hdl = export_hdl(ram, machine.spec, module_name);
    bundle.meta = machine.spec;
    return bundle;
}

RamImage parse_truth_table(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw std::runtime_error("truth table: empty text");
    }
    uint32_t address_bits = 0, data_bits = 0;
    if (std::sscanf(lines[0].c_str(), "address[%u:0] data[%u:0]", &address_bits,
                    &data_bits) != 2) {
        throw std::runtime_error("truth table: malformed header");
    }
    RamImage ram;
    ram.address_bits = address_bits + 1;
    ram.data_bits = data_bits + 1;
    const size_t count = size_t{1} << ram.address_bits;
    if (lines.size() != count + 1) {
        throw std::runtime_error("truth table: wrong number of data lines");
    }
    ram.words.assign(count, 0);
    for (size_t addr = 0; addr < count; ++addr) {
        const std::string& line = lines[addr + 1];
        const size_t space = line.find(' ');
        if (space == std::string::npos) {
            throw std::runtime_error("truth table: malformed data line");
        }
        const uint32_t parsed_addr = from_binary(std::string_view(line).substr(0, space));
        if (parsed_addr != addr) {
            throw std::runtime_error("truth table: addresses not ascending");
        }
        ram.words[addr] = from_binary(std::string_view(line).substr(space + 1));
    }
    return ram;
}

RamImage parse_mif(std::string_view text) {
    const auto lines = split_lines(text);
    size_t depth = 0;
    uint32_t width = 0;
    RamImage ram;
    size_t next_addr = 0;
    bool in_content = false;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        unsigned long long value = 0;
        if (std::sscanf(line.c_str(), "DEPTH = %llu;", &value) == 1) {
            depth = static_cast<size_t>(value);
            continue;
        }
        if (std::sscanf(line.c_str(), "WIDTH = %llu;", &value) == 1) {
            width = static_cast<uint32_t>(value);
            continue;
        }
        if (line == "ADDRESS_RADIX = BIN;" || line == "DATA_RADIX = BIN;" ||
            line == "CONTENT") {
            continue;
        }
        if (line == "BEGIN") {
            if (depth == 0 || width == 0 || (depth & (depth - 1)) != 0) {
                throw std::runtime_error("mif: missing or non-power-of-two DEPTH/WIDTH");
            }
            ram.address_bits = static_cast<uint32_t>(std::bit_width(depth) - 1);
            ram.data_bits = width;
            ram.words.assign(depth, 0);
            in_content = true;
            continue;
        }
        if (line == "END;") {
            if (next_addr != depth) {
                throw std::runtime_error("mif: wrong number of content lines");
            }
            return ram;
        }
        if (!in_content) {
            throw std::runtime_error("mif: unexpected line before content: " + line);
        }
        const size_t sep = line.find(" : ");
        if (sep == std::string::npos || line.back() != ';') {
            throw std::runtime_error("mif: malformed content line: " + line);
        }
        const uint32_t addr = from_binary(std::string_view(line).substr(0, sep));
        if (addr != next_addr) {
            throw std::runtime_error("mif: addresses not ascending");
        }
        ram.words[addr] =
            from_binary(std::string_view(line).substr(sep + 3, line.size() - sep - 4));
        ++next_addr;
    }
    throw std::runtime_error("mif: missing END;");
}

RamImage parse_hdl(std::string_view text) {
    const auto lines = split_lines(text);
    RamImage ram;
    uint32_t states = 0, t = 0, x = 0, y = 0;
    bool have_meta = false;
    size_t seen = 0;
    for (const std::string& line : lines) {
        if (!have_meta) {
            if (std::sscanf(line.c_str(),
                            "// S=%u states, T=%u triggers, x=%u input bits, y=%u output bits",
                            &states, &t, &x, &y) == 4) {
                have_meta = true;
                ram.address_bits = t + x;
                ram.data_bits = t + y;
                ram.words.assign(size_t{1} << ram.address_bits, 0);
            }
            continue;
        }
        uint32_t addr_width = 0, data_width = 0;
        char addr_digits[40] = {0};
        char data_digits[40] = {0};
        if (std::sscanf(line.c_str(), " %u'b%39[01]: word = %u'b%39[01];", &addr_width,
                        addr_digits, &data_width, data_digits) == 4) {
            if (addr_width != ram.address_bits || data_width != ram.data_bits) {
                throw std::runtime_error("hdl: case entry width mismatch");
            }
            const uint32_t addr = from_binary(addr_digits);
            if (addr >= ram.words.size()) {
                throw std::runtime_error("hdl: case address out of range");
            }
            ram.words[addr] = from_binary(data_digits);
            ++seen;
        }
    }
    if (!have_meta) {
        throw std::runtime_error("hdl: missing metadata comment header");
    }
    if (seen != ram.words.size()) {
        throw std::runtime_error("hdl: expected " + std::to_string(ram.words.size()) +
                                 " case entries, found " + std::to_string(seen));
    }
    return ram;
}

}  // namespace fsmsynth::hw
