import { describe, expect, it } from "vitest";

import { EXPECTED_HEADER, parseSweepCsv, SchemaError, verdictTags } from "../src/csv.js";

const GOOD = [
  EXPECTED_HEADER,
  "0.1,0.2,,aligned,0,,0.25",
  "0.1,0.3,0.5,not-aligned,2,01,-0.1",
  "",
].join("\n");

describe("parseSweepCsv", () => {
  it("parses rows with optional fields", () => {
    const rows = parseSweepCsv(GOOD);
    expect(rows).toHaveLength(2);
    expect(rows[0]).toEqual({
      param1: 0.1, param2: 0.2, param3: null,
      verdict: "aligned", level: 0, witness: null, margin: 0.25,
    });
    expect(rows[1].param3).toBe(0.5);
    expect(rows[1].witness).toBe("01");
  });

  it("collects verdict tags in first-appearance order", () => {
    expect(verdictTags(parseSweepCsv(GOOD))).toEqual(["aligned", "not-aligned"]);
  });

  it("rejects a wrong header with line 1", () => {
    expect(() => parseSweepCsv("a,b,c\n1,2,3\n")).toThrowError(SchemaError);
    try {
      parseSweepCsv("a,b,c\n1,2,3\n");
    } catch (e) {
      expect((e as SchemaError).line).toBe(1);
    }
  });

  it("reports the offending line number for bad rows", () => {
    const bad = [EXPECTED_HEADER, "0.1,0.2,,ok,,,", "0.1,oops,,ok,,,", ""].join("\n");
    try {
      parseSweepCsv(bad);
      expect.unreachable();
    } catch (e) {
      expect(e).toBeInstanceOf(SchemaError);
      expect((e as SchemaError).line).toBe(3);
      expect((e as SchemaError).message).toContain("line 3");
    }
  });

  it("rejects wrong field counts and empty verdicts", () => {
    expect(() => parseSweepCsv(`${EXPECTED_HEADER}\n1,2,3,v,0,w\n`)).toThrow(/7 fields/);
    expect(() => parseSweepCsv(`${EXPECTED_HEADER}\n1,2,,,,,\n`)).toThrow(/verdict/);
    expect(() => parseSweepCsv(`${EXPECTED_HEADER}\n`)).toThrow(/no data rows/);
  });
});
