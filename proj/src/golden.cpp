#include "sl2ext/golden.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2ext {

namespace {

constexpr std::string_view kSelfTwistCsv =
    "m,weight,dim\n"
    "4,16,2\n"
    "5,32,3\n"
    "6,64,5\n"
    "7,128,9\n"
    "8,256,16\n"
    "9,512,28\n"
    "10,1024,50\n"
    "11,2048,89\n"
    "12,4096,159\n"
    "13,8192,285\n"
    "14,16384,510\n"
    "15,32768,914\n"
    "16,65536,1639\n"
    "17,131072,2938\n"
    "18,262144,5269\n"
    "19,524288,9451\n"
    "20,1048576,16952\n"
    "21,2097152,30410\n"
    "22,4194304,54555\n"
    "23,8388608,97871\n"
    "24,16777216,175586\n"
    "25,33554432,315016\n"
    "26,67108864,565168\n"
    "27,134217728,1013976\n"
    "28,268435456,1819198\n"
    "29,536870912,3263875\n"
    "30,1073741824,5855833\n"
    "31,2147483648,10506175\n";

constexpr std::string_view kR3TwistCsv =
    "m,weight,dim\n"
    "3,6,1\n"
    "4,12,1\n"
    "5,24,2\n"
    "6,48,4\n"
    "7,96,6\n"
    "8,192,11\n"
    "9,384,20\n"
    "10,768,35\n"
    "11,1536,63\n"
    "12,3072,113\n"
    "13,6144,201\n"
    "14,12288,361\n"
    "15,24576,647\n"
    "16,49152,1159\n"
    "17,98304,2080\n"
    "18,196608,3730\n"
    "19,393216,6689\n"
    "20,786432,12001\n"
    "21,1572864,21528\n"
    "22,3145728,38619\n"
    "23,6291456,69287\n"
    "24,12582912,124304\n"
    "25,25165824,223010\n"
    "26,50331648,400108\n"
    "27,100663296,717838\n"
    "28,201326592,1287890\n"
    "29,402653184,2310651\n"
    "30,805306368,4145619\n"
    "31,1610612736,7437818\n"
    "32,3221225472,13344508\n";

constexpr std::string_view kHeader = "m,weight,dim";

BigInt parse_big(std::string_view field, std::size_t line_no) {
    if (field.empty())
        throw std::invalid_argument("table CSV line " + std::to_string(line_no) + ": empty field");
    for (char c : field)
        if (c < '0' || c > '9')
            throw std::invalid_argument("table CSV line " + std::to_string(line_no) +
                                        ": non-numeric field '" + std::string(field) + "'");
    return BigInt(std::string(field));
}

}  // namespace

std::string_view golden_self_twist_csv() { return kSelfTwistCsv; }
std::string_view golden_r3_twist_csv() { return kR3TwistCsv; }

const std::vector<TableRow>& golden_self_twist() {
    static const std::vector<TableRow> rows = parse_table_csv(kSelfTwistCsv);
    return rows;
}

const std::vector<TableRow>& golden_r3_twist() {
    static const std::vector<TableRow> rows = parse_table_csv(kR3TwistCsv);
    return rows;
}

std::string format_table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const TableRow& row : rows)
        out << row.degree << ',' << row.weight << ',' << row.dim << '\n';
    return out.str();
}

std::vector<TableRow> parse_table_csv(std::string_view csv) {
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = csv.size();
        std::string_view line = csv.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != kHeader)
                throw std::invalid_argument("table CSV must start with header '" +
                                            std::string(kHeader) + "'");
            continue;
        }
        if (line.empty())
            continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
            throw std::invalid_argument("table CSV line " + std::to_string(line_no) +
                                        ": expected exactly three fields");
        const BigInt degree = parse_big(line.substr(0, c1), line_no);
        if (degree > 1'000'000'000)
            throw std::invalid_argument("table CSV line " + std::to_string(line_no) +
                                        ": implausible degree");
        rows.push_back(TableRow{degree.convert_to<unsigned>(),
                                parse_big(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                                parse_big(line.substr(c2 + 1), line_no)});
    }
    if (line_no == 0)
        throw std::invalid_argument("table CSV is empty");
    return rows;
}

}  // namespace sl2ext
