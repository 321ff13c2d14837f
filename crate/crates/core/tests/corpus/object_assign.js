var a = Object.assign({}, defaults, options);
var b = Object.assign({ mode: "fast" }, overrides);
var c = Object.assign({}, ...layers);
var d = Object.assign(target, source);
var e = Object.assign(f({}), g);
var h = Object.assign({}, first, ...more);
var i = Object.assign({}, single);
var j = Object.assign(make(), { k: 1 });
var k = Object.assign(f({}));
