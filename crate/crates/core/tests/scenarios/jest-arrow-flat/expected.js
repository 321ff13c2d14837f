describe("math", () => {
  setup();
});
it("adds", () => {
  expect(add(1, 2)).toBe(3);
});
it("subtracts", () => {
  var d = sub(3, 1);
  expect(d).toBe(2);
});
helper(function named() {
  return 1;
});
