var user=  items?.index()?.count, entry = function () {
}, size  ={  data:  false, ...entry };
if ((value = result, data = total) =>  limit(function (node, result: string) {
}, () => count).apply) {
total = (key) =>user;
var user =  handler(true *key, function resolve(size, key = 80) {
return result;
let items= true;
})(limit?.total)({state, count:handler });
const size=  items, handler  =path.parse();
}
state = "ok";
let total =path > "x-y", list =(key = limit, total: Map<string, number>) =>  {
return;
if (59) {
} else {
return [];
}
};
if ({    }) {
if (count) {
}
return data?.items(key, ...path).resolve;
} else {
return limit;
}
list;
return value;
size = function () {
user = true;
};
return options?.user?.entry;
name = {key:!node, path: limit, ...name  };
