#include "klsw/goldens.hpp"

namespace klsw {
namespace goldens {

namespace {

Table make_s4_ttilde() {
    Table t;
    t.name = "s4-ttilde";
    t.row_labels = {"1234", "1324", "2134", "1243", "1423", "1342", "2314", "3124",
                    "2143", "2413", "4123", "2341", "3142", "3412", "1432", "3214",
                    "2431", "4132", "4213", "3241", "4312", "3421", "4231", "4321"};
    t.col_labels = {"1234", "1324", "2134", "1243", "1423", "1342", "2314",
                    "3124", "2143", "2413", "4123", "2341", "3142", "3412"};
    t.entries = {
        {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[2]^2/[4]", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[3]/[4]", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[3]/[4]", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[2]/[4]", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[2]/[4]", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
        {"[2]/[4]", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"},
        {"[2]/[4]", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
        {"[2]^3/([3][4])", "0", "1/[2]", "1/[2]", "0", "0", "0", "0", "1", "0", "1/[2]", "1/[2]",
         "0", "0"},
        {"[2]^2/([3][4])", "0", "0", "0", "1/[2]", "0", "1/[2]", "0", "0", "1", "0", "0", "0",
         "0"},
        {"1/[4]", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
        {"1/[4]", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
        {"[2]^2/([3][4])", "0", "0", "0", "0", "1/[2]", "0", "1/[2]", "0", "0", "0", "0", "1",
         "0"},
        {"[2]/([3][4])", "1/[2]", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"},
        {"[2]^2/([3][4])", "-1/([2][4])", "0", "-[2]/[4]", "[3]/[4]", "[3]/[4]", "0", "0", "0",
         "0", "0", "0", "0", "1/[2]"},
        {"[2]^2/([3][4])", "-1/([2][4])", "-[2]/[4]", "0", "0", "0", "[3]/[4]", "[3]/[4]", "0",
         "0", "0", "0", "0", "1/[2]"},
        {"[2]/([3][4])", "0", "0", "-1/[4]", "[3]/([2][4])", "0", "-1/([2][4])", "0", "0",
         "1/[2]", "0", "[3]/[4]", "0", "0"},
        {"[2]/([3][4])", "0", "0", "-1/[4]", "0", "[3]/([2][4])", "0", "-1/([2][4])", "0", "0",
         "[3]/[4]", "0", "1/[2]", "0"},
        {"[2]/([3][4])", "0", "-1/[4]", "0", "-1/([2][4])", "0", "[3]/([2][4])", "0", "0",
         "1/[2]", "[3]/[4]", "0", "0", "0"},
        {"[2]/([3][4])", "0", "-1/[4]", "0", "0", "-1/([2][4])", "0", "[3]/([2][4])", "0", "0",
         "0", "[3]/[4]", "1/[2]", "0"},
        {"1/([3][4])", "[3]/([2][4])", "0", "0", "-1/[4]", "0", "0", "-1/[4]", "0", "0",
         "[2]/[4]", "0", "0", "1/[2]"},
        {"1/([3][4])", "[3]/([2][4])", "0", "0", "0", "-1/[4]", "-1/[4]", "0", "0", "0", "0",
         "[2]/[4]", "0", "1/[2]"},
        {"1/([3][4])", "0", "-1/([2][4])", "-1/([2][4])", "0", "0", "0", "0", "1/[2]", "0",
         "[3]/([2][4])", "[3]/([2][4])", "0", "0"},
        {"1/([2][3][4])", "1/[4]", "0", "0", "-1/([2][4])", "-1/([2][4])", "-1/([2][4])",
         "-1/([2][4])", "1/[3]", "-1/([2][3])", "1/[4]", "1/[4]", "-1/([2][3])", "1/[3]"}};
    return t;
}

std::vector<Table> make_example33_lower() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    Table a{"ex33-lower-s1", labels, labels, {{"[2]", "0", "0"}, {"0", "[2]", "1"}, {"0", "0", "0"}}};
    Table b{"ex33-lower-s2", labels, labels, {{"[2]", "1", "0"}, {"0", "0", "0"}, {"0", "1", "[2]"}}};
    Table c{"ex33-lower-s3", labels, labels, {{"0", "0", "0"}, {"1", "[2]", "0"}, {"0", "0", "[2]"}}};
    return {a, b, c};
}

std::vector<Table> make_example33_upper() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    Table a{"ex33-upper-s1", labels, labels, {{"[2]", "0", "0"}, {"0", "[2]", "0"}, {"0", "1", "0"}}};
    Table b{"ex33-upper-s2", labels, labels, {{"[2]", "0", "0"}, {"1", "0", "1"}, {"0", "0", "[2]"}}};
    Table c{"ex33-upper-s3", labels, labels, {{"0", "1", "0"}, {"0", "[2]", "0"}, {"0", "0", "[2]"}}};
    return {a, b, c};
}

Table make_t31() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    return {"t31", labels, labels, {{"1", "0", "0"}, {"[2]/[3]", "1", "0"}, {"1/[3]", "1/[2]", "1"}}};
}

Table make_d31() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    return {"d31", labels, labels,
            {{"[3]", "0", "0"}, {"0", "[2][4]/[3]", "0"}, {"0", "0", "[4]/[2]"}}};
}

Table make_tp31_inv() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    return {"tp31-inv", labels, labels,
            {{"1", "[2]/[3]", "1/[3]"}, {"0", "1", "1/[2]"}, {"0", "0", "1"}}};
}

Table make_s31() {
    std::vector<std::string> labels = {"123/4", "124/3", "134/2"};
    return {"s31", labels, labels,
            {{"[3]", "[2]", "1"}, {"[2]", "[2]^2", "[2]"}, {"1", "[2]", "[3]"}}};
}

std::vector<std::string> labels42() {
    return {"1234/56", "1235/46", "1245/36", "1345/26", "1236/45",
            "1246/35", "1346/25", "1256/34", "1356/24"};
}

Table make_tp42_inv() {
    Table t;
    t.name = "tp42-inv";
    t.row_labels = t.col_labels = labels42();
    t.entries = {
        {"1", "[3]/[4]", "[2]/[4]", "[1]/[4]", "[2]/[4]", "[2]^2/[4]", "[2]/[4]", "[2]/([4][3])",
         "[2]^2/([3][4])"},
        {"0", "1", "[2]/[3]", "1/[3]", "[2]/[3]", "[2]^2/[3]^2", "[2]/[3]^2", "[2]/[3]^2",
         "[2]^2/[3]^2"},
        {"0", "0", "1", "1/[2]", "0", "[2]/[3]", "1/[3]", "1/[3]", "1/([2][3])"},
        {"0", "0", "0", "1", "0", "0", "[2]/[3]", "0", "1/[3]"},
        {"0", "0", "0", "0", "1", "[2]/[3]", "1/[3]", "1/[3]", "[2]/[3]"},
        {"0", "0", "0", "0", "0", "1", "1/[2]", "1/[2]", "1/[2]^2"},
        {"0", "0", "0", "0", "0", "0", "1", "0", "1/[2]"},
        {"0", "0", "0", "0", "0", "0", "0", "1", "1/[2]"},
        {"0", "0", "0", "0", "0", "0", "0", "0", "1"}};
    return t;
}

Table make_s42() {
    Table t;
    t.name = "s42";
    t.row_labels = t.col_labels = labels42();
    t.entries = {
        {"[3][4]", "[3]^2", "[2][3]", "[3]", "[2][3]", "[2]^2[3]", "[2][3]", "[2]", "[2]^2"},
        {"[3]^2", "[2][3]^2", "[2]^2[3]", "[2][3]", "[2]^2[3]", "2[4]+3[2]", "2[3]+1", "[2]^2",
         "[2]^3"},
        {"[2][3]", "[2]^2[3]", "[2][3]^2", "[3]^2", "[2]^3", "[2]^4", "[2]^3", "[2][3]",
         "2[3]+1"},
        {"[3]", "[2][3]", "[3]^2", "[3][4]", "[2]^2", "[2]^3", "[3]^2", "[3]", "[2][3]"},
        {"[2][3]", "[2]^2[3]", "[2]^3", "[2]^2", "[2][3]^2", "[2]^4", "[2]^3", "[2][3]",
         "[2]^2[3]"},
        {"[2]^2[3]", "2[4]+3[2]", "[2]^4", "[2]^3", "[2]^4", "[2]^5", "[2]^4", "[2]^2[3]",
         "2[4]+3[2]"},
        {"[2][3]", "2[3]+1", "[2]^3", "[3]^2", "[2]^3", "[2]^4", "[2][3]^2", "[2][3]",
         "[2]^2[3]"},
        {"[2]", "[2]^2", "[2][3]", "[3]", "[2][3]", "[2]^2[3]", "[2][3]", "[3][4]", "[3]^2"},
        {"[2]^2", "[2]^3", "2[3]+1", "[2][3]", "[2]^2[3]", "2[4]+3[2]", "[2]^2[3]", "[3]^2",
         "[2][3]^2"}};
    return t;
}

}  // namespace

const Table& s4_ttilde() {
    static Table t = make_s4_ttilde();
    return t;
}
const std::vector<Table>& example33_lower() {
    static std::vector<Table> t = make_example33_lower();
    return t;
}
const std::vector<Table>& example33_upper() {
    static std::vector<Table> t = make_example33_upper();
    return t;
}
const Table& t31() {
    static Table t = make_t31();
    return t;
}
const Table& d31() {
    static Table t = make_d31();
    return t;
}
const Table& tp31_inv() {
    static Table t = make_tp31_inv();
    return t;
}
const Table& s31() {
    static Table t = make_s31();
    return t;
}
const Table& tp42_inv() {
    static Table t = make_tp42_inv();
    return t;
}
const Table& s42() {
    static Table t = make_s42();
    return t;
}

const std::vector<const Table*>& all_tables() {
    static std::vector<const Table*> v = {&s4_ttilde(),  &example33_lower()[0],
                                          &example33_lower()[1], &example33_lower()[2],
                                          &example33_upper()[0], &example33_upper()[1],
                                          &example33_upper()[2], &t31(),
                                          &d31(),        &tp31_inv(),
                                          &s31(),        &tp42_inv(),
                                          &s42()};
    return v;
}

}  // namespace goldens
}  // namespace klsw
